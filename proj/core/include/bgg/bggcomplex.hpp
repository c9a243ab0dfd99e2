#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "bgg/envelope.hpp"
#include "bgg/linalg.hpp"
#include "bgg/polmodel.hpp"
#include "bgg/rootsys.hpp"

namespace bgg {

/// One Bruhat cover w -> w' = s_alpha w. The differential component runs
/// C(w.lambda) -> C(w'.lambda) and is scalar * psi_pol(u_psi), where u_psi
/// spans the singular vectors of M(w.lambda) of weight -(w'.lambda).
struct ComplexEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t root = 0;
  EnvElement u_psi;
  Rational scalar = 1;
};

/// Which incoming edge of each Weyl element is pinned to scalar 1.
enum class Gauge { FirstLowerCover, LastLowerCover };

/// 0 -> V -> C(lambda) -> (+)_{l(w)=1} C(w.lambda) -> ... -> C(w0.lambda) -> 0
class BGGComplex {
 public:
  BGGComplex(std::shared_ptr<const Algebra> algebra, Weight lambda, std::vector<PolySpace> spaces,
             std::vector<ComplexEdge> edges);

  const Algebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return algebra_; }
  const RootSystem& roots() const { return algebra_->roots(); }
  const Weight& lambda() const { return lambda_; }

  /// Index of the last position, |Phi+|.
  int top_position() const { return roots().longest_length(); }
  /// Weyl indices at a position (= length), in Weyl enumeration order.
  const std::vector<std::size_t>& term(int position) const { return roots().weyl_of_length(position); }
  /// C(w.lambda) for a Weyl index.
  const PolySpace& space(std::size_t w) const { return spaces_[w]; }

  const std::vector<ComplexEdge>& edges() const { return edges_; }
  std::vector<ComplexEdge>& edges() { return edges_; }
  std::optional<std::size_t> edge_index(std::size_t from, std::size_t to) const;

  /// d applied to (f_w)_{w in term(position)}, returning (g_w')_{w' in term(position + 1)}.
  std::vector<PolyElement> apply_differential(int position, const std::vector<PolyElement>& x) const;

  /// Monomial bases of the nu-block of every term at a position, concatenated
  /// in term order.
  std::vector<std::vector<MultiIndex>> block_bases(int position, const Weight& nu) const;
  /// Matrix of d_position : term(position)_nu -> term(position + 1)_nu.
  linalg::Matrix differential_block(int position, const Weight& nu) const;

 private:
  std::shared_ptr<const Algebra> algebra_;
  Weight lambda_;
  std::vector<PolySpace> spaces_;
  std::vector<ComplexEdge> edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_lookup_;
};

/// Builds the complex with every edge scalar 1 (call fix_signs afterwards).
/// Throws InvalidInput unless lambda is dominant, InternalError if an edge has
/// no singular vector. Edges are solved on `jobs` threads.
BGGComplex assemble(std::shared_ptr<const Algebra> algebra, const Weight& lambda, unsigned jobs = 1);

/// Chooses edge scalars so that every length-2 square anticommutes: for
/// w < x1, x2 < w'' the composites along both sides cancel. One incoming
/// edge per Weyl element (selected by `gauge`) keeps scalar 1; the rest are
/// propagated square by square. Throws InternalError when a square's two
/// composites are not proportional or the propagation is inconsistent.
BGGComplex fix_signs(BGGComplex complex, Gauge gauge = Gauge::FirstLowerCover);

struct WeightBlockReport {
  Weight nu;
  int height = 0;  // height of lambda - nu
  std::vector<std::size_t> dims;
  std::vector<std::size_t> ranks;  // ranks[i] = rank of d_i, i < top position
  /// Position 0: kernel matches dim V_nu. Position i >= 1: image of d_{i-1}
  /// equals kernel of d_i (surjectivity at the last position).
  std::vector<bool> exact_at;
  std::size_t kernel0_dim = 0;
  long euler_char = 0;
  std::uint64_t v_multiplicity = 0;
  bool d_squared_zero = true;
  /// dims[i] equals the sum of Kostant partition numbers over term(i).
  bool kostant_dims_match = true;

  bool all_exact() const;
  bool ok() const;
};

struct ComplexReport {
  Weight lambda;
  int height_cutoff = 0;
  std::vector<WeightBlockReport> blocks;
  std::size_t kernel0_total = 0;
  std::uint64_t weyl_dimension = 0;
  /// Every weight of V lies within the cutoff.
  bool covers_all_weights = false;
  bool verdict = false;
  double elapsed_ms = 0;
};

WeightBlockReport verify_weight_block(const BGGComplex& complex, const Weight& nu);

/// Every nu = lambda - beta with beta a nonnegative root combination of height
/// <= height_cutoff, checked on `jobs` threads. The verdict requires every
/// block to pass and the kernel total to equal the Weyl dimension.
ComplexReport verify_all(const BGGComplex& complex, int height_cutoff, unsigned jobs = 1);

/// 2 <lambda + rho, theta^vee> for the highest root theta, clamped to `cap`.
int default_height_cutoff(const RootSystem& rs, const Weight& lambda, int cap);

/// For an edge whose root is simple, u_psi = E_alpha^k and the differential
/// may act as c * (d/dT_alpha)^k. Returns c when it does on a probe set of
/// monomials, nothing otherwise (or for non-simple edges).
std::optional<Rational> derivative_scalar(const BGGComplex& complex, const ComplexEdge& edge);

}  // namespace bgg
