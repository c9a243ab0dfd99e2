#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bgg/rootsys.hpp"
#include "bgg/scalar.hpp"

namespace bgg {

enum class GenKind { E, H, F };

/// E_alpha / F_alpha carry a positive-root index, H_i a simple-root index.
struct Generator {
  GenKind kind = GenKind::E;
  int index = 0;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator E(int i) { return {GenKind::E, i}; }
inline Generator H(int i) { return {GenKind::H, i}; }
inline Generator F(int i) { return {GenKind::F, i}; }

std::string to_string(Generator g);

struct EnvTag;
/// Element of U(g): keys are PBW exponent vectors over the generator order
/// E_1..E_r, H_1..H_l, F_1..F_r (root order from RootSystem).
using EnvElement = SparseVector<EnvTag>;

/// Linear combination of generators, by generator index.
using GenCombination = std::vector<std::pair<int, int>>;

struct StructureConstants {
  int rank = 0;
  int num_positive = 0;
  /// N_{alpha,beta} for positive alpha, beta with alpha + beta a root.
  std::map<std::pair<int, int>, int> n_table;
  /// alpha_k(H_i), indexed [i][k].
  std::vector<std::vector<int>> cartan_pairings;
  /// [x_a, x_b] for every pair of generator indices.
  std::vector<std::vector<GenCombination>> bracket;

  int num_generators() const { return 2 * num_positive + rank; }
  /// [E_alpha, F_beta] expanded in generators.
  const GenCombination& ef(int alpha, int beta) const {
    return bracket[alpha][num_positive + rank + beta];
  }
};

/// Chevalley basis constants with every extraspecial pair given a positive
/// sign (extraspecial pair of xi: the decomposition xi = a + b, a before b in
/// root order, with a earliest).
StructureConstants chevalley_constants(const RootSystem& rs);

/// N_{r,s} for arbitrary (signed) roots, 0 when r + s is not a root.
int structure_constant(const RootSystem& rs, const StructureConstants& sc, const Root& r, const Root& s);

enum class ReductionOrder { Leftmost, Shuffled };

/// U(g) for a fixed root system. Products are computed by inserting one
/// generator at a time into PBW monomials; insertions are memoised and the
/// memo is safe to share between threads.
class Algebra {
 public:
  explicit Algebra(std::shared_ptr<const RootSystem> rs);

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& roots_ptr() const { return rs_; }
  const StructureConstants& constants() const { return sc_; }

  int num_generators() const { return sc_.num_generators(); }
  int num_positive() const { return sc_.num_positive; }
  int index_of(Generator g) const;
  Generator generator_at(int index) const;

  EnvElement one() const;
  EnvElement element(Generator g) const;
  /// E_1^{n_1} ... E_r^{n_r} for an exponent vector over positive roots.
  EnvElement e_monomial(const MultiIndex& n) const;
  /// Root-lattice weight of a PBW monomial (E_a: +alpha, F_a: -alpha, H: 0).
  Root weight_of(const MultiIndex& pbw) const;
  /// True when every term is a pure E-monomial, i.e. the element lies in U(n).
  bool in_positive_part(const EnvElement& u) const;
  /// E-block exponents of a PBW key.
  MultiIndex e_exponents(const MultiIndex& pbw) const;

  EnvElement multiply(const EnvElement& a, const EnvElement& b) const;
  EnvElement left_multiply(Generator g, const EnvElement& b) const;
  EnvElement commutator(const EnvElement& a, const EnvElement& b) const;

  /// Product of a generator word by adjacent-pair rewriting: repeatedly pick
  /// an out-of-order pair and replace x_i x_j by x_j x_i + [x_i, x_j].
  /// Leftmost always rewrites the first descent of the smallest word;
  /// Shuffled picks words and descents pseudo-randomly from `seed`.
  EnvElement normal_order(std::span<const Generator> word, ReductionOrder order = ReductionOrder::Leftmost,
                          std::uint64_t seed = 0) const;

  /// Principal anti-automorphism: X_1...X_k -> (-1)^k X_k...X_1.
  EnvElement antipode(const EnvElement& u) const;

  std::string format(const EnvElement& u) const;
  std::size_t memo_size() const;

 private:
  void left_mul_into(int gen, const MultiIndex& m, const Rational& c, EnvElement& out) const;
  const EnvElement& insertion(int gen, const MultiIndex& m) const;
  EnvElement compute_insertion(int gen, const MultiIndex& m) const;

  std::shared_ptr<const RootSystem> rs_;
  StructureConstants sc_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<MultiIndex, EnvElement, MultiIndexHash> memo_;
};

}  // namespace bgg
