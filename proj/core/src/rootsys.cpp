#include "bgg/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "bgg/errors.hpp"

namespace bgg {
namespace {

template <class Vec>
std::string format_coords(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

bool supported(Series s, int rank) {
  switch (s) {
    case Series::A: return rank >= 1 && rank <= 4;
    case Series::B: return rank >= 2 && rank <= 3;
    case Series::C: return rank >= 2 && rank <= 3;
    case Series::D: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

}  // namespace

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::G: return "G";
  }
  return "?";
}

Series parse_series(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return Series::A;
      case 'B': return Series::B;
      case 'C': return Series::C;
      case 'D': return Series::D;
      case 'G': return Series::G;
      default: break;
    }
  }
  throw InvalidInput("unknown root system series '" + std::string(text) + "'");
}

CartanDatum cartan_datum(Series series, int rank) {
  if (!supported(series, rank)) {
    throw InvalidInput("unsupported root system " + series_name(series) + std::to_string(rank));
  }
  const int n = rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  if (series == Series::G) {
    c[0][1] = -3;
    c[1][0] = -1;
  } else {
    for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    if (series == Series::B) c[n - 1][n - 2] = -2;
    if (series == Series::C) c[n - 2][n - 1] = -2;
    if (series == Series::D) {
      c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
      c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
    }
  }
  return CartanDatum{series, rank, std::move(c)};
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool Root::is_nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

Root& Root::operator+=(const Root& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Root& Root::operator-=(const Root& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

std::string to_string(const Weight& w) { return format_coords(w.coords); }
std::string to_string(const Root& r) { return format_coords(r.coords); }

Weight WeylElement::apply(const Weight& w) const {
  Weight out{std::vector<int>(w.coords.size(), 0)};
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) out.coords[i] += matrix[i][j] * w.coords[j];
  }
  return out;
}

RootSystem::RootSystem(Series series, int rank) : datum_(cartan_datum(series, rank)) {
  const int n = rank;
  const auto& c = datum_.matrix;

  // Symmetrizer d with d_i c[i][j] = d_j c[j][i], scaled so the short roots get d = 1.
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || c[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * c[i][j] / c[j][i];
      queue.push_back(j);
    }
  }
  const Rational dmin = *std::min_element(d.begin(), d.end());
  symmetrizer_.resize(n);
  for (int i = 0; i < n; ++i) {
    const Rational v = d[i] / dmin;
    if (v.get_den() != 1) throw InternalError("non-integral symmetrizer");
    symmetrizer_[i] = static_cast<int>(v.get_num().get_si());
  }

  linalg::Matrix cm(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cm(i, j) = c[i][j];
  }
  cartan_inverse_ = linalg::inverse(cm);

  // Positive roots by root strings: beta + alpha_i is a root iff q > 0 where
  // p - q = <beta, alpha_i^vee> and p is the length of the downward string.
  std::vector<Root> roots;
  std::map<Root, bool> seen;
  for (int i = 0; i < n; ++i) {
    roots.push_back(simple_root(i));
    seen[roots.back()] = true;
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Root beta = roots[k];
    for (int i = 0; i < n; ++i) {
      const Root ai = simple_root(i);
      int p = 0;
      Root down = beta - ai;
      while (seen.count(down)) {
        ++p;
        down -= ai;
      }
      const int q = p - simple_pairing(beta, i);
      if (q > 0) {
        Root up = beta + ai;
        if (!seen.count(up)) {
          seen[up] = true;
          roots.push_back(std::move(up));
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });
  positive_ = std::move(roots);
  for (std::size_t k = 0; k < positive_.size(); ++k) positive_lookup_[positive_[k]] = k;

  for (const auto& r : positive_) {
    const int nr = norm2(r);
    std::vector<int> cv(n);
    for (int i = 0; i < n; ++i) {
      const int num = r.coords[i] * 2 * symmetrizer_[i];
      if (num % nr != 0) throw InternalError("non-integral coroot");
      cv[i] = num / nr;
    }
    coroots_.push_back(std::move(cv));
  }

  // Weyl group, breadth first over left multiplication by simple reflections.
  // Elements are identified by their image of rho, which has trivial stabiliser.
  std::vector<std::vector<std::vector<int>>> simple_mats;
  for (int i = 0; i < n; ++i) {
    const Weight ai = to_weight(simple_root(i));
    std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
    for (int r = 0; r < n; ++r) {
      s[r][r] = 1;
      s[r][i] -= ai.coords[r];
    }
    simple_mats.push_back(std::move(s));
  }
  WeylElement id;
  id.matrix.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) id.matrix[i][i] = 1;
  weyl_.push_back(id);
  weyl_lookup_[rho().coords] = 0;
  by_length_.push_back({0});
  for (std::size_t k = 0; k < weyl_.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      WeylElement next;
      next.matrix.assign(n, std::vector<int>(n, 0));
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          int v = 0;
          for (int t = 0; t < n; ++t) v += simple_mats[i][r][t] * weyl_[k].matrix[t][s];
          next.matrix[r][s] = v;
        }
      }
      const auto key = next.apply(rho()).coords;
      if (weyl_lookup_.count(key)) continue;
      next.length = weyl_[k].length + 1;
      next.reduced_word.push_back(i);
      next.reduced_word.insert(next.reduced_word.end(), weyl_[k].reduced_word.begin(),
                               weyl_[k].reduced_word.end());
      weyl_lookup_[key] = weyl_.size();
      if (static_cast<int>(by_length_.size()) <= next.length) by_length_.emplace_back();
      by_length_[next.length].push_back(weyl_.size());
      weyl_.push_back(std::move(next));
    }
  }

  for (std::size_t w = 0; w < weyl_.size(); ++w) {
    const Weight wrho = weyl_[w].apply(rho());
    for (std::size_t a = 0; a < positive_.size(); ++a) {
      const std::size_t v = lookup(reflect(a, wrho));
      if (weyl_[v].length == weyl_[w].length + 1) edges_.push_back(BruhatEdge{w, v, a});
    }
  }
}

std::optional<std::size_t> RootSystem::positive_index(const Root& r) const {
  auto it = positive_lookup_.find(r);
  if (it == positive_lookup_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Root& r) const {
  return positive_lookup_.count(r) > 0 || positive_lookup_.count(-r) > 0;
}

Root RootSystem::simple_root(int i) const {
  Root r{std::vector<int>(rank(), 0)};
  r.coords[i] = 1;
  return r;
}

int RootSystem::norm2(const Root& r) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) s += r.coords[i] * r.coords[j] * symmetrizer_[i] * datum_.matrix[i][j];
  }
  return s;
}

int RootSystem::coroot_pairing(const Weight& mu, std::size_t root) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += coroots_[root][i] * mu.coords[i];
  return s;
}

int RootSystem::simple_pairing(const Root& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += datum_.matrix[i][j] * beta.coords[j];
  return s;
}

Weight RootSystem::to_weight(const Root& r) const {
  Weight w{std::vector<int>(rank(), 0)};
  for (int i = 0; i < rank(); ++i) w.coords[i] = simple_pairing(r, i);
  return w;
}

std::optional<Root> RootSystem::to_root(const Weight& w) const {
  Root r{std::vector<int>(rank(), 0)};
  for (int k = 0; k < rank(); ++k) {
    Rational v = 0;
    for (int i = 0; i < rank(); ++i) v += cartan_inverse_(k, i) * w.coords[i];
    if (v.get_den() != 1) return std::nullopt;
    r.coords[k] = static_cast<int>(v.get_num().get_si());
  }
  return r;
}

bool RootSystem::in_positive_cone(const Weight& w) const {
  auto r = to_root(w);
  return r && r->is_nonnegative();
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  // (a, b) = sum_k r_k (alpha_k, b) with r = root coordinates of a and
  // (alpha_k, b) = d_k b_k.
  Rational s = 0;
  for (int k = 0; k < rank(); ++k) {
    Rational rk = 0;
    for (int i = 0; i < rank(); ++i) rk += cartan_inverse_(k, i) * a.coords[i];
    s += rk * symmetrizer_[k] * b.coords[k];
  }
  return s;
}

bool RootSystem::is_dominant(const Weight& w) const {
  return std::all_of(w.coords.begin(), w.coords.end(), [](int c) { return c >= 0; });
}

Weight RootSystem::dominant_conjugate(const Weight& w) const {
  Weight cur = w;
  for (;;) {
    int i = 0;
    while (i < rank() && cur.coords[i] >= 0) ++i;
    if (i == rank()) return cur;
    cur = reflect(static_cast<std::size_t>(i), cur);
  }
}

Weight RootSystem::reflect(std::size_t root, const Weight& w) const {
  const int k = coroot_pairing(w, root);
  Weight a = to_weight(positive_[root]);
  Weight out = w;
  for (int i = 0; i < rank(); ++i) out.coords[i] -= k * a.coords[i];
  return out;
}

std::size_t RootSystem::lookup(const Weight& image_of_rho) const {
  auto it = weyl_lookup_.find(image_of_rho.coords);
  if (it == weyl_lookup_.end()) throw InternalError("weight is not in the Weyl orbit of rho");
  return it->second;
}

std::size_t RootSystem::compose(std::size_t a, std::size_t b) const {
  return lookup(weyl_[a].apply(weyl_[b].apply(rho())));
}

std::size_t RootSystem::inverse(std::size_t a) const {
  Weight cur = rho();
  for (int i : weyl_[a].reduced_word) cur = reflect(static_cast<std::size_t>(i), cur);
  return lookup(cur);
}

std::vector<int> RootSystem::apply_root_action(std::size_t w, const Root& r) const {
  auto image = to_root(weyl_[w].apply(to_weight(r)));
  if (!image) throw InternalError("Weyl image left the root lattice");
  return image->coords;
}

int RootSystem::inversion_count(std::size_t w) const {
  int count = 0;
  for (const auto& a : positive_) {
    const auto img = apply_root_action(w, a);
    if (std::any_of(img.begin(), img.end(), [](int c) { return c < 0; })) ++count;
  }
  return count;
}

std::shared_ptr<const RootSystem> build_root_system(Series series, int rank) {
  return std::make_shared<const RootSystem>(series, rank);
}

Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  return w.apply(lambda + rs.rho()) - rs.rho();
}

std::uint64_t kostant_partition(const RootSystem& rs, const Root& beta) {
  if (!beta.is_nonnegative()) return 0;
  const int n = rs.rank();
  // Unbounded-knapsack table over the box [0, beta]; mixed-radix flat indexing
  // puts x - alpha before x for every positive alpha.
  std::vector<std::size_t> stride(n);
  std::size_t total = 1;
  for (int i = n - 1; i >= 0; --i) {
    stride[i] = total;
    total *= static_cast<std::size_t>(beta.coords[i] + 1);
  }
  std::vector<std::uint64_t> table(total, 0);
  table[0] = 1;
  std::vector<int> x(n);
  for (const auto& alpha : rs.positive_roots()) {
    std::size_t offset = 0;
    for (int i = 0; i < n; ++i) offset += stride[i] * static_cast<std::size_t>(alpha.coords[i]);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rem = flat;
      bool fits = true;
      for (int i = 0; i < n; ++i) {
        x[i] = static_cast<int>(rem / stride[i]);
        rem %= stride[i];
        if (x[i] < alpha.coords[i]) fits = false;
      }
      if (fits) table[flat] += table[flat - offset];
    }
  }
  return table[total - 1];
}

namespace {

class Freudenthal {
 public:
  Freudenthal(const RootSystem& rs, const Weight& lambda) : rs_(rs), lambda_(lambda) {
    if (!rs.is_dominant(lambda)) throw InvalidInput("highest weight must be dominant: " + to_string(lambda));
    const Weight lr = lambda + rs.rho();
    top_norm_ = rs.inner(lr, lr);
    for (const auto& a : rs.positive_roots()) alphas_.push_back(rs.to_weight(a));
  }

  // Weights of V are exactly the mu whose dominant conjugate lies below lambda.
  bool in_support(const Weight& mu) const { return rs_.in_positive_cone(lambda_ - rs_.dominant_conjugate(mu)); }

  std::uint64_t operator()(const Weight& mu) {
    if (!in_support(mu)) return 0;
    if (mu == lambda_) return 1;
    if (auto it = memo_.find(mu); it != memo_.end()) return it->second;
    Rational sum = 0;
    for (const auto& a : alphas_) {
      Weight shifted = mu + a;
      while (in_support(shifted)) {
        const std::uint64_t m = (*this)(shifted);
        sum += Rational(static_cast<unsigned long>(m)) * rs_.inner(shifted, a);
        shifted += a;
      }
    }
    const Weight mr = mu + rs_.rho();
    const Rational denom = top_norm_ - rs_.inner(mr, mr);
    if (denom == 0) throw InternalError("Freudenthal denominator vanished at " + to_string(mu));
    const Rational value = 2 * sum / denom;
    if (value.get_den() != 1 || value < 0) throw InternalError("non-integral multiplicity at " + to_string(mu));
    const auto result = static_cast<std::uint64_t>(value.get_num().get_ui());
    memo_.emplace(mu, result);
    return result;
  }

 private:
  const RootSystem& rs_;
  Weight lambda_;
  Rational top_norm_;
  std::vector<Weight> alphas_;
  std::map<Weight, std::uint64_t> memo_;
};

}  // namespace

std::uint64_t freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& nu) {
  Freudenthal f(rs, lambda);
  return f(nu);
}

std::map<Weight, std::uint64_t> weight_multiplicities(const RootSystem& rs, const Weight& lambda) {
  Freudenthal f(rs, lambda);
  std::map<Weight, std::uint64_t> out;
  // Breadth-first walk down from lambda; the support is saturated so every
  // weight is reachable by subtracting simple roots.
  std::deque<Weight> queue{lambda};
  std::map<Weight, bool> seen{{lambda, true}};
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    const std::uint64_t m = f(mu);
    if (m == 0) continue;
    out.emplace(mu, m);
    for (int i = 0; i < rs.rank(); ++i) {
      Weight next = mu - rs.to_weight(rs.simple_root(i));
      if (!seen.count(next) && f.in_support(next)) {
        seen[next] = true;
        queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::uint64_t weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) throw InvalidInput("highest weight must be dominant: " + to_string(lambda));
  const Weight lr = lambda + rs.rho();
  Rational p = 1;
  for (std::size_t a = 0; a < rs.num_positive(); ++a) {
    Rational ratio(rs.coroot_pairing(lr, a), rs.coroot_pairing(rs.rho(), a));
    ratio.canonicalize();
    p *= ratio;
  }
  if (p.get_den() != 1) throw InternalError("non-integral Weyl dimension");
  return p.get_num().get_ui();
}

}  // namespace bgg
