#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "bgg/envelope.hpp"
#include "bgg/rootsys.hpp"
#include "bgg/scalar.hpp"

namespace bgg {

struct VermaTag;
/// Vector in a Verma module over the basis E_1^{n_1}...E_r^{n_r} (x) 1,
/// keyed by the exponent vector n.
using VermaVector = SparseVector<VermaTag>;

/// M(nu) = U(g) (x)_{U(b-)} A_nu^*: lowest weight -nu, annihilated by the F's.
/// Copies share one action cache.
class VermaModule {
 public:
  VermaModule(std::shared_ptr<const Algebra> algebra, Weight nu);

  const Weight& nu() const { return nu_; }
  const Algebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return algebra_; }

  /// Weight -nu + sum n_i alpha_i of a basis vector.
  Weight weight_of(const MultiIndex& n) const;

  /// Basis exponents of the given weight, lexicographically increasing.
  /// Empty when the weight is outside the support.
  std::vector<MultiIndex> weight_space_basis(const Weight& weight) const;

  VermaVector act(Generator g, const VermaVector& v) const;
  VermaVector act(const EnvElement& u, const VermaVector& v) const;

  /// u (x) 1 with u in U(g): H acts on 1 (x) 1 by -nu(H), F by zero.
  VermaVector collapse(const EnvElement& u) const;

  VermaVector lowest_vector() const;

 private:
  struct Cache {
    std::shared_mutex mutex;
    std::unordered_map<MultiIndex, VermaVector, MultiIndexHash> table;
  };

  void act_into(int gen, const MultiIndex& n, const Rational& c, VermaVector& out) const;
  const VermaVector& act_basis(int gen, const MultiIndex& n) const;
  VermaVector compute_act(int gen, const MultiIndex& n) const;

  std::shared_ptr<const Algebra> algebra_;
  Weight nu_;
  std::shared_ptr<Cache> cache_;
};

/// Every exponent vector n over the positive roots with sum n_i alpha_i = beta,
/// lexicographically increasing.
std::vector<MultiIndex> monomials_of_weight(const RootSystem& rs, const Root& beta);

/// psi: M(source_nu) -> M(target_nu), 1 (x) 1 -> u_psi (x) 1 with u_psi in U(n).
struct VermaHom {
  EnvElement u_psi;
  Weight source_nu;
  Weight target_nu;
};

/// Solves {F_i (u (x) 1) = 0 for all simple i} over the weight space of
/// weight target.nu - sought_nu. Returns the solution normalised to
/// coefficient 1 at its lexicographically greatest monomial, or nothing when
/// the space is zero or sought_nu is not below target.nu. Throws
/// InternalError if the solution space has dimension > 1.
std::optional<VermaHom> find_singular_vector(const VermaModule& target, const Weight& sought_nu);

/// psi(u (x) 1) = u u_psi (x) 1, evaluated in `target` (which must be M(h.target_nu)).
VermaVector apply_hom(const VermaHom& h, const VermaVector& v, const VermaModule& target);

}  // namespace bgg
