#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bgg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector. Used for PBW monomials, Verma basis vectors and
/// polynomial monomials alike; the owning container fixes the meaning.
using MultiIndex = std::vector<int>;

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int e : m) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

Integer factorial(int n);

/// Product of factorials of the entries.
Integer multi_factorial(const MultiIndex& m);

std::string to_string(const Rational& q);

/// Sparse rational-coefficient combination of basis keys. Zero coefficients
/// are never stored. The tag separates otherwise identical key spaces.
template <class Tag>
class SparseVector {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  SparseVector() = default;
  explicit SparseVector(Terms terms) : terms_(std::move(terms)) { prune(); }
  SparseVector(MultiIndex key, Rational coeff) { add(std::move(key), coeff); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const MultiIndex& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const MultiIndex& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const SparseVector& other, const Rational& c) {
    if (c == 0) return;
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }

  SparseVector& operator+=(const SparseVector& o) {
    add_scaled(o, 1);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    add_scaled(o, -1);
    return *this;
  }
  SparseVector& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Rational& c, SparseVector a) { return a *= c; }
  friend SparseVector operator-(SparseVector a) { return a *= Rational(-1); }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.terms_ == b.terms_; }

 private:
  void prune() { std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; }); }

  Terms terms_;
};

}  // namespace bgg
