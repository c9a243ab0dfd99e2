#include "bgg/scalar.hpp"

namespace bgg {

Integer factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Integer multi_factorial(const MultiIndex& m) {
  Integer r = 1;
  for (int e : m) r *= factorial(e);
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace bgg
