#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "bgg/bggcomplex.hpp"
#include "bgg/envelope.hpp"
#include "bgg/linalg.hpp"
#include "bgg/polmodel.hpp"
#include "bgg/rootsys.hpp"
#include "bgg/verma.hpp"

namespace bgg {

inline void PrintTo(const Root& r, std::ostream* os) { *os << to_string(r); }
inline void PrintTo(const Weight& w, std::ostream* os) { *os << to_string(w); }

}  // namespace bgg

namespace bgg::testing {

using Rng = std::mt19937_64;

/// Outcome of a property run: how many cases were checked and the first
/// counterexample, if any.
struct PropertyResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what);
  bool passed() const { return failures == 0 && cases > 0; }
  PropertyResult& operator+=(const PropertyResult& o);
};

struct SystemSpec {
  Series series;
  int rank;
  std::string name() const { return series_name(series) + std::to_string(rank); }
};

/// Every supported (series, rank) pair.
std::vector<SystemSpec> all_systems();

std::shared_ptr<const Algebra> make_algebra(Series s, int rank);

// Generators --------------------------------------------------------------

Rational random_rational(Rng& rng, int num_bound = 4, int den_bound = 3);
/// A combination of products of up to `max_len` random generators.
EnvElement random_element(const Algebra& alg, Rng& rng, int max_terms = 3, int max_len = 3);
/// A random element of U(n) (pure E-monomials).
EnvElement random_positive_element(const Algebra& alg, Rng& rng, int max_terms = 3, int max_degree = 3);
VermaVector random_verma_vector(const Algebra& alg, Rng& rng, int max_terms = 3, int max_degree = 3);
PolyElement random_poly(const Algebra& alg, Rng& rng, int max_terms = 3, int max_degree = 3);
/// A random polynomial of the given weight in the space, or zero if the block is empty.
PolyElement random_block_poly(const PolySpace& space, const Weight& nu, Rng& rng);
/// Nonnegative integer vector with entries in [0, bound].
Weight random_dominant(int rank, Rng& rng, int bound);

// Oracles -----------------------------------------------------------------

/// Kostant partition count by direct enumeration of multiplicity vectors.
std::uint64_t brute_kostant(const RootSystem& rs, const Root& beta);

/// Rank by plain rational Gaussian elimination.
std::size_t gauss_rank(const linalg::Matrix& m);

/// Matrices of E, H, F on the (n+1)-dimensional irreducible sl2-module.
struct Sl2Irrep {
  int n;
  linalg::Matrix E, H, F;
};
Sl2Irrep sl2_irrep(int n);
/// Image of an element of U(sl2) in a finite-dimensional representation.
linalg::Matrix represent(const Algebra& sl2, const EnvElement& u, const Sl2Irrep& rep);

/// Multiplicity of nu in V(lambda) by the Kostant multiplicity formula,
/// summing over the Weyl group with brute_kostant.
std::uint64_t kostant_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& nu);

/// Dimension of V(lambda) for type A by the product over positive roots,
/// written in terms of partial sums of the label vector.
std::uint64_t type_a_dimension(const Weight& lambda);

// Property suites ---------------------------------------------------------

PropertyResult jacobi_exhaustive(const Algebra& alg);
PropertyResult pbw_associativity(const Algebra& alg, Rng& rng, int trials);
/// normal_order agrees with multiply and with itself under both rewriting orders.
PropertyResult normal_order_routes(const Algebra& alg, Rng& rng, int trials);
PropertyResult antipode_reverses_products(const Algebra& alg, Rng& rng, int trials);
/// pairing(E^n, T^m / m!) = delta over all monomials of height <= max_height.
PropertyResult dual_basis_exhaustive(const Algebra& alg, int max_height);
/// Verma weight spaces of height <= max_height have Kostant dimension.
PropertyResult verma_dims_match_kostant(const std::shared_ptr<const Algebra>& alg, int max_height);
/// psi commutes with every generator on `trials` random vectors of M(source).
PropertyResult hom_equivariance(const VermaModule& source, const VermaModule& target, const VermaHom& h, Rng& rng,
                                int trials);
/// psi_pol commutes with the dual action of every generator on random block vectors.
PropertyResult psi_pol_equivariance(const EnvElement& u, const PolySpace& source, const PolySpace& target, Rng& rng,
                                    int trials, int max_height);
/// psi_pol maps weight-nu polynomials to weight-nu polynomials.
PropertyResult psi_pol_preserves_weight(const EnvElement& u, const PolySpace& source, const PolySpace& target,
                                        Rng& rng, int trials, int max_height);
/// Every edge singular vector is annihilated by every F_i and has the right weight.
PropertyResult edge_vectors_singular(const BGGComplex& complex);
/// The total differential commutes with the dual action on random block vectors.
PropertyResult differential_equivariance(const BGGComplex& complex, Rng& rng, int trials, int max_height);
/// Two gauges: same dims, ranks, exactness and kernels on every block.
PropertyResult gauge_independence(const BGGComplex& assembled, int cutoff);
/// d o d = 0 on every block of a report.
PropertyResult d_squared_zero(const ComplexReport& report);

}  // namespace bgg::testing
