#pragma once

#include <map>
#include <memory>
#include <vector>

#include "bgg/envelope.hpp"
#include "bgg/linalg.hpp"
#include "bgg/rootsys.hpp"
#include "bgg/verma.hpp"

namespace bgg {

struct PolyTag;
/// Polynomial in K[T_1, ..., T_r], one variable per positive root, keyed by
/// exponent vectors.
using PolyElement = SparseVector<PolyTag>;

/// The polynomial realisation of the graded dual of M(mu). The monomial T^m
/// corresponds to m! times the functional dual to E^m (x) 1 and has weight
/// mu - sum m_i alpha_i.
class PolySpace {
 public:
  PolySpace(std::shared_ptr<const Algebra> algebra, Weight mu);

  const Weight& mu() const { return verma_.nu(); }
  int num_variables() const { return verma_.algebra().num_positive(); }
  const Algebra& algebra() const { return verma_.algebra(); }
  /// The module this space is dual to; shares its action cache.
  const VermaModule& verma() const { return verma_; }

  Weight weight_of(const MultiIndex& m) const;
  /// Monomials of weight nu, lexicographically increasing.
  std::vector<MultiIndex> block_basis(const Weight& nu) const;

 private:
  VermaModule verma_;
};

/// T^m / m!, the image of the dual basis functional of E^m (x) 1.
PolyElement zeta_of_dual_basis(const MultiIndex& m);

/// <u (x) 1, f> for u in U(n): sum over n of u_n n! f_n. Throws InvalidInput
/// if u has F or H factors.
Rational pairing(const Algebra& algebra, const EnvElement& u, const PolyElement& f);

/// Same pairing against a Verma vector.
Rational pairing(const VermaVector& v, const PolyElement& f);

/// (g f)(v) = f(-g v): the contragredient action transported to polynomials.
PolyElement dual_act(const PolySpace& space, Generator g, const PolyElement& f);

/// Unique decomposition of f into weight vectors.
std::map<Weight, PolyElement> weight_components(const PolySpace& space, const PolyElement& f);

/// The transpose of psi: M(target.mu) -> M(source.mu), 1 (x) 1 -> u_psi (x) 1,
/// characterised by <E^n, psi_pol(f)> = <E^n u_psi, f> for every n. Throws
/// InvalidInput unless u_psi is in U(n) with weight source.mu - target.mu.
PolyElement psi_pol(const EnvElement& u_psi, const PolyElement& f, const PolySpace& source, const PolySpace& target);

/// Matrix of psi_pol between weight blocks, in the monomial bases given.
/// Entry (row n, column m) is m!/n! times the coefficient of E^m in E^n u_psi.
linalg::Matrix psi_pol_block(const Algebra& algebra, const EnvElement& u_psi, const std::vector<MultiIndex>& source_basis,
                             const std::vector<MultiIndex>& target_basis);

struct KernelBlock {
  Weight nu;
  std::vector<PolyElement> basis;
};

/// Per-weight bases of the joint kernel of the simple-reflection maps out of
/// the polynomial space of weight lambda. Weights with a zero kernel are
/// omitted; the order is by depth below lambda, then lexicographic.
std::vector<KernelBlock> embed_V(std::shared_ptr<const Algebra> algebra, const Weight& lambda);

/// All weights lambda - beta with beta a nonnegative root combination of
/// height <= max_height, ordered by height of beta then lexicographically.
std::vector<Weight> weights_below(const RootSystem& rs, const Weight& lambda, int max_height);

}  // namespace bgg
