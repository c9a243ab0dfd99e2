#include "bgg/linalg.hpp"

#include <utility>

#include "bgg/errors.hpp"

namespace bgg::linalg {
namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows to_integer_rows(const Matrix& m) {
  IntRows rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rows[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
  }
  return rows;
}

// Bareiss forward elimination to row echelon form. Every stored entry stays an
// integer minor of the input, so the division by the previous pivot is exact.
// Returns the pivot column of each nonzero row.
std::vector<std::size_t> bareiss_echelon(IntRows& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t nrows = a.size();
  Integer prev = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < nrows; ++c) {
    std::size_t p = k;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[k]);
    const Integer& piv = a[k][c];
    for (std::size_t i = k + 1; i < nrows; ++i) {
      const Integer lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = piv * a[i][j] - lead * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++k;
  }
  return pivots;
}

}  // namespace

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto rows = to_integer_rows(m);
  return bareiss_echelon(rows, m.cols()).size();
}

std::vector<std::vector<Rational>> kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  auto rows = to_integer_rows(m);
  const auto pivots = bareiss_echelon(rows, n);

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(n);
    x[free] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (rows[k][j] != 0 && x[j] != 0) s += Rational(rows[k][j]) * x[j];
      }
      x[pc] = -s / Rational(rows[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidInput("inverse of a non-square matrix");
  Matrix a = m;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw InvalidInput("inverse of a singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace bgg::linalg
