#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgg/linalg.hpp"
#include "bgg/scalar.hpp"

namespace bgg {

enum class Series { A, B, C, D, G };

std::string series_name(Series s);

/// Parses "A".."G" (case-insensitive); throws InvalidInput otherwise.
Series parse_series(std::string_view text);

/// Cartan matrix with entry (i, j) = <alpha_j, alpha_i^vee>, Bourbaki labelling.
/// B_n and C_n put the odd-length root last, G_2 has alpha_1 short.
struct CartanDatum {
  Series series = Series::A;
  int rank = 0;
  std::vector<std::vector<int>> matrix;
};

/// Throws InvalidInput for pairs outside A1-A4, B2-B3, C2-C3, D4, G2.
CartanDatum cartan_datum(Series series, int rank);

/// Element of the root lattice in simple-root coordinates.
struct Root {
  std::vector<int> coords;

  int height() const;
  bool is_zero() const;
  /// All coordinates >= 0.
  bool is_nonnegative() const;

  Root& operator+=(const Root& o);
  Root& operator-=(const Root& o);
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  friend Root operator*(int k, Root a) {
    for (auto& c : a.coords) c *= k;
    return a;
  }
  friend Root operator-(Root a) { return -1 * std::move(a); }
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Integral weight in fundamental-weight coordinates.
struct Weight {
  std::vector<int> coords;

  bool is_zero() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (auto& c : a.coords) c = -c;
    return a;
  }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);
std::string to_string(const Root& r);

struct WeylElement {
  /// w = s_{word[0]} s_{word[1]} ... ; empty for the identity.
  std::vector<int> reduced_word;
  /// Action on fundamental-weight coordinates.
  std::vector<std::vector<int>> matrix;
  int length = 0;

  Weight apply(const Weight& w) const;
};

/// Cover relation w -> s_alpha w in Bruhat order, with l(s_alpha w) = l(w) + 1.
/// `from`/`to` index RootSystem::weyl(), `root` indexes positive_roots().
struct BruhatEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t root = 0;
};

class RootSystem {
 public:
  RootSystem(Series series, int rank);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }

  /// Ordered by height, then by coordinates descending, so the simple roots
  /// occupy indices 0..rank-1 in their natural order.
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }
  std::optional<std::size_t> positive_index(const Root& r) const;
  /// True for positive and negative roots (never for zero).
  bool is_root(const Root& r) const;
  Root simple_root(int i) const;
  const Root& highest_root() const { return positive_.back(); }

  /// (alpha, alpha) with the short roots normalised to 2.
  int norm2(const Root& r) const;
  /// Coordinates of alpha^vee in the simple coroot basis.
  const std::vector<int>& coroot(std::size_t root) const { return coroots_[root]; }
  /// <mu, alpha^vee> for the positive root with the given index.
  int coroot_pairing(const Weight& mu, std::size_t root) const;
  /// <beta, alpha_i^vee> for a root-lattice vector and a simple coroot.
  int simple_pairing(const Root& beta, int i) const;

  Weight to_weight(const Root& r) const;
  /// Simple-root coordinates of a weight when it lies in the root lattice.
  std::optional<Root> to_root(const Weight& w) const;
  /// True when w is a nonnegative integral combination of simple roots.
  bool in_positive_cone(const Weight& w) const;

  Weight zero_weight() const { return Weight{std::vector<int>(rank(), 0)}; }
  Weight rho() const { return Weight{std::vector<int>(rank(), 1)}; }
  Rational inner(const Weight& a, const Weight& b) const;
  bool is_dominant(const Weight& w) const;
  Weight dominant_conjugate(const Weight& w) const;
  Weight reflect(std::size_t root, const Weight& w) const;

  /// Whole Weyl group in breadth-first order; index 0 is the identity and
  /// lengths are non-decreasing along the vector.
  const std::vector<WeylElement>& weyl() const { return weyl_; }
  const std::vector<std::size_t>& weyl_of_length(int len) const { return by_length_.at(len); }
  int longest_length() const { return static_cast<int>(by_length_.size()) - 1; }
  std::size_t longest_element() const { return weyl_.size() - 1; }
  /// Index of w_a w_b.
  std::size_t compose(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  int inversion_count(std::size_t w) const;
  const std::vector<BruhatEdge>& bruhat_edges() const { return edges_; }

 private:
  std::size_t lookup(const Weight& image_of_rho) const;
  std::vector<int> apply_root_action(std::size_t w, const Root& r) const;

  CartanDatum datum_;
  std::vector<int> symmetrizer_;  // (alpha_i, alpha_i) / 2
  linalg::Matrix cartan_inverse_;
  std::vector<Root> positive_;
  std::map<Root, std::size_t> positive_lookup_;
  std::vector<std::vector<int>> coroots_;
  std::vector<WeylElement> weyl_;
  std::vector<std::vector<std::size_t>> by_length_;
  std::map<std::vector<int>, std::size_t> weyl_lookup_;
  std::vector<BruhatEdge> edges_;
};

std::shared_ptr<const RootSystem> build_root_system(Series series, int rank);

/// w . lambda = w(lambda + rho) - rho.
Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

/// Number of ways to write beta as a sum of positive roots (0 if beta is not
/// in the positive cone).
std::uint64_t kostant_partition(const RootSystem& rs, const Root& beta);

/// Multiplicity of nu in the irreducible module of highest weight lambda,
/// via the Freudenthal recursion. Throws InvalidInput unless lambda is
/// dominant.
std::uint64_t freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& nu);

/// All weights of the irreducible module with their multiplicities.
std::map<Weight, std::uint64_t> weight_multiplicities(const RootSystem& rs, const Weight& lambda);

std::uint64_t weyl_dimension(const RootSystem& rs, const Weight& lambda);

}  // namespace bgg
