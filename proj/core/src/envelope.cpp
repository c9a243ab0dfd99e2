#include "bgg/envelope.hpp"

#include <mutex>
#include <random>
#include <sstream>

#include "bgg/errors.hpp"

namespace bgg {
namespace {

using NTable = std::map<std::pair<int, int>, int>;

int lookup_n(const RootSystem& rs, const NTable& table, const Root& r, const Root& s) {
  const Root t = r + s;
  if (t.is_zero() || !rs.is_root(t)) return 0;
  const auto ri = rs.positive_index(r);
  const auto si = rs.positive_index(s);
  if (ri && si) {
    auto it = table.find({static_cast<int>(*ri), static_cast<int>(*si)});
    if (it == table.end()) throw InternalError("structure constant requested out of order");
    return it->second;
  }
  if (!ri && !si) return -lookup_n(rs, table, -r, -s);
  if (!ri) return -lookup_n(rs, table, s, r);
  // r > 0 > s with r + s + u = 0:  N_{r,s}/(u,u) = N_{s,u}/(r,r) = N_{u,r}/(s,s).
  const Root u = -t;
  Rational v;
  if (rs.positive_index(t)) {
    v = Rational(-rs.norm2(u) * lookup_n(rs, table, -s, -u), rs.norm2(r));
  } else {
    v = Rational(rs.norm2(u) * lookup_n(rs, table, u, r), rs.norm2(s));
  }
  v.canonicalize();
  if (v.get_den() != 1) throw InternalError("non-integral structure constant");
  return static_cast<int>(v.get_num().get_si());
}

// The positive-pair table is filled by increasing height of the sum, so every
// lookup made while computing level h touches only sums of height < h.
class ConstantBuilder {
 public:
  ConstantBuilder(const RootSystem& rs, NTable& table) : rs_(rs), table_(table) {}

  int n(const Root& r, const Root& s) const { return lookup_n(rs_, table_, r, s); }

  void build() {
    const auto& pos = rs_.positive_roots();
    const int np = static_cast<int>(pos.size());
    int max_height = pos.back().height();
    for (int h = 2; h <= max_height; ++h) {
      for (int x = 0; x < np; ++x) {
        if (pos[x].height() != h) continue;
        fill_level(x);
      }
    }
  }

 private:
  bool positive(const Root& r) const { return rs_.positive_index(r).has_value(); }
  int index(const Root& r) const { return static_cast<int>(*rs_.positive_index(r)); }

  int string_length(const Root& a, const Root& b) const {
    int p = 0;
    Root cur = b - a;
    while (!cur.is_zero() && rs_.is_root(cur)) {
      ++p;
      cur -= a;
    }
    return p;
  }

  void fill_level(int x) {
    const auto& pos = rs_.positive_roots();
    const Root& xi = pos[x];
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < static_cast<int>(pos.size()); ++a) {
      const Root b = xi - pos[a];
      if (b.is_zero() || !positive(b)) continue;
      pairs.emplace_back(a, index(b));
    }
    // Extraspecial pair: a < b with a smallest.
    int g = -1, d = -1;
    for (auto [a, b] : pairs) {
      if (a < b && (g < 0 || a < g)) {
        g = a;
        d = b;
      }
    }
    const Root& gamma = pos[g];
    const Root& delta = pos[d];
    const int pe = string_length(gamma, delta) + 1;
    for (auto [a, b] : pairs) {
      int value;
      if (a == g && b == d) {
        value = pe;
      } else if (a == d && b == g) {
        value = -pe;
      } else {
        const Root& alpha = pos[a];
        const Root& beta = pos[b];
        Rational t2 = 0, t3 = 0;
        const Root bg = beta - gamma;
        if (rs_.is_root(bg)) t2 = Rational(n(beta, -gamma) * n(alpha, -delta), rs_.norm2(bg));
        const Root ag = alpha - gamma;
        if (rs_.is_root(ag)) t3 = Rational(n(-gamma, alpha) * n(beta, -delta), rs_.norm2(ag));
        t2.canonicalize();
        t3.canonicalize();
        const Rational v = Rational(rs_.norm2(xi)) * (t2 + t3) / pe;
        if (v.get_den() != 1) throw InternalError("non-integral structure constant");
        value = static_cast<int>(v.get_num().get_si());
      }
      table_[{a, b}] = value;
    }
  }

  const RootSystem& rs_;
  NTable& table_;
};

}  // namespace

std::string to_string(Generator g) {
  const char* k = g.kind == GenKind::E ? "E" : g.kind == GenKind::H ? "H" : "F";
  return k + std::to_string(g.index + 1);
}

StructureConstants chevalley_constants(const RootSystem& rs) {
  StructureConstants sc;
  sc.rank = rs.rank();
  sc.num_positive = static_cast<int>(rs.num_positive());
  ConstantBuilder builder(rs, sc.n_table);
  builder.build();

  const int r = sc.num_positive;
  const int l = sc.rank;
  const auto& pos = rs.positive_roots();
  sc.cartan_pairings.assign(l, std::vector<int>(r));
  for (int i = 0; i < l; ++i) {
    for (int k = 0; k < r; ++k) sc.cartan_pairings[i][k] = rs.simple_pairing(pos[k], i);
  }

  const int ng = sc.num_generators();
  auto e_idx = [](int k) { return k; };
  auto h_idx = [r](int i) { return r + i; };
  auto f_idx = [r, l](int k) { return r + l + k; };
  sc.bracket.assign(ng, std::vector<GenCombination>(ng));

  auto signed_gen = [&](const Root& root) {
    if (auto k = rs.positive_index(root)) return e_idx(static_cast<int>(*k));
    return f_idx(static_cast<int>(*rs.positive_index(-root)));
  };

  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      const Root& ra = pos[a];
      const Root& rb = pos[b];
      if (int nab = builder.n(ra, rb); nab != 0) {
        const int sum = static_cast<int>(*rs.positive_index(ra + rb));
        sc.bracket[e_idx(a)][e_idx(b)] = {{e_idx(sum), nab}};
      }
      if (int nab = builder.n(-ra, -rb); nab != 0) {
        const int sum = static_cast<int>(*rs.positive_index(ra + rb));
        sc.bracket[f_idx(a)][f_idx(b)] = {{f_idx(sum), nab}};
      }
      GenCombination ef;
      if (a == b) {
        for (int i = 0; i < l; ++i) {
          if (rs.coroot(a)[i] != 0) ef.emplace_back(h_idx(i), rs.coroot(a)[i]);
        }
      } else if (int c = builder.n(ra, -rb); c != 0) {
        ef.emplace_back(signed_gen(ra - rb), c);
      }
      GenCombination fe = ef;
      for (auto& [g, c] : fe) c = -c;
      sc.bracket[e_idx(a)][f_idx(b)] = std::move(ef);
      sc.bracket[f_idx(b)][e_idx(a)] = std::move(fe);
    }
  }
  for (int i = 0; i < l; ++i) {
    for (int k = 0; k < r; ++k) {
      const int c = sc.cartan_pairings[i][k];
      if (c == 0) continue;
      sc.bracket[h_idx(i)][e_idx(k)] = {{e_idx(k), c}};
      sc.bracket[e_idx(k)][h_idx(i)] = {{e_idx(k), -c}};
      sc.bracket[h_idx(i)][f_idx(k)] = {{f_idx(k), -c}};
      sc.bracket[f_idx(k)][h_idx(i)] = {{f_idx(k), c}};
    }
  }
  return sc;
}

int structure_constant(const RootSystem& rs, const StructureConstants& sc, const Root& r, const Root& s) {
  return lookup_n(rs, sc.n_table, r, s);
}

Algebra::Algebra(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)), sc_(chevalley_constants(*rs_)) {}

int Algebra::index_of(Generator g) const {
  switch (g.kind) {
    case GenKind::E: return g.index;
    case GenKind::H: return sc_.num_positive + g.index;
    case GenKind::F: return sc_.num_positive + sc_.rank + g.index;
  }
  return -1;
}

Generator Algebra::generator_at(int index) const {
  const int r = sc_.num_positive;
  const int l = sc_.rank;
  if (index < r) return E(index);
  if (index < r + l) return H(index - r);
  return F(index - r - l);
}

EnvElement Algebra::one() const { return EnvElement(MultiIndex(num_generators(), 0), 1); }

EnvElement Algebra::element(Generator g) const {
  MultiIndex m(num_generators(), 0);
  m[index_of(g)] = 1;
  return EnvElement(std::move(m), 1);
}

EnvElement Algebra::e_monomial(const MultiIndex& n) const {
  MultiIndex m(num_generators(), 0);
  for (std::size_t k = 0; k < n.size(); ++k) m[k] = n[k];
  return EnvElement(std::move(m), 1);
}

Root Algebra::weight_of(const MultiIndex& pbw) const {
  const auto& pos = rs_->positive_roots();
  const int r = sc_.num_positive;
  const int l = sc_.rank;
  Root w{std::vector<int>(l, 0)};
  for (int k = 0; k < r; ++k) {
    const int net = pbw[k] - pbw[r + l + k];
    if (net != 0) w += net * pos[k];
  }
  return w;
}

bool Algebra::in_positive_part(const EnvElement& u) const {
  const int r = sc_.num_positive;
  for (const auto& [m, c] : u.terms()) {
    for (int k = r; k < num_generators(); ++k) {
      if (m[k] != 0) return false;
    }
  }
  return true;
}

MultiIndex Algebra::e_exponents(const MultiIndex& pbw) const {
  return MultiIndex(pbw.begin(), pbw.begin() + sc_.num_positive);
}

const EnvElement& Algebra::insertion(int gen, const MultiIndex& m) const {
  MultiIndex key = m;
  key.push_back(gen);
  {
    std::shared_lock lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  EnvElement value = compute_insertion(gen, m);
  std::unique_lock lock(memo_mutex_);
  return memo_.try_emplace(std::move(key), std::move(value)).first->second;
}

EnvElement Algebra::compute_insertion(int gen, const MultiIndex& m) const {
  // m = x_j m' with x_j the leading generator and gen > j:
  //   x_gen x_j m' = x_j (x_gen m') + [x_gen, x_j] m'
  int j = 0;
  while (m[j] == 0) ++j;
  MultiIndex rest = m;
  --rest[j];
  EnvElement moved;
  left_mul_into(gen, rest, 1, moved);
  EnvElement out;
  for (const auto& [t, c] : moved.terms()) left_mul_into(j, t, c, out);
  for (const auto& [k, c] : sc_.bracket[gen][j]) left_mul_into(k, rest, Rational(c), out);
  return out;
}

void Algebra::left_mul_into(int gen, const MultiIndex& m, const Rational& c, EnvElement& out) const {
  const int ng = num_generators();
  int j = 0;
  while (j < ng && m[j] == 0) ++j;
  if (gen <= j) {
    MultiIndex t = m;
    ++t[gen];
    out.add(t, c);
    return;
  }
  out.add_scaled(insertion(gen, m), c);
}

EnvElement Algebra::left_multiply(Generator g, const EnvElement& b) const {
  const int gen = index_of(g);
  EnvElement out;
  for (const auto& [m, c] : b.terms()) left_mul_into(gen, m, c, out);
  return out;
}

EnvElement Algebra::multiply(const EnvElement& a, const EnvElement& b) const {
  const int ng = num_generators();
  EnvElement out;
  for (const auto& [ma, ca] : a.terms()) {
    EnvElement cur = ca * b;
    for (int g = ng - 1; g >= 0; --g) {
      for (int e = 0; e < ma[g]; ++e) {
        EnvElement next;
        for (const auto& [m, c] : cur.terms()) left_mul_into(g, m, c, next);
        cur = std::move(next);
      }
    }
    out += cur;
  }
  return out;
}

EnvElement Algebra::commutator(const EnvElement& a, const EnvElement& b) const {
  return multiply(a, b) - multiply(b, a);
}

EnvElement Algebra::normal_order(std::span<const Generator> word, ReductionOrder order, std::uint64_t seed) const {
  const int ng = num_generators();
  std::mt19937_64 rng(seed);
  std::map<std::vector<int>, Rational> pending;
  std::vector<int> start;
  for (const auto& g : word) start.push_back(index_of(g));
  pending[start] = 1;

  EnvElement out;
  auto push = [&pending](std::vector<int> w, const Rational& c) {
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) pending.erase(it);
    }
  };
  while (!pending.empty()) {
    auto it = pending.begin();
    if (order == ReductionOrder::Shuffled) {
      std::advance(it, static_cast<long>(rng() % pending.size()));
    }
    std::vector<int> w = it->first;
    const Rational c = it->second;
    pending.erase(it);

    std::vector<std::size_t> descents;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) descents.push_back(p);
    }
    if (descents.empty()) {
      MultiIndex m(ng, 0);
      for (int g : w) ++m[g];
      out.add(m, c);
      continue;
    }
    const std::size_t p =
        order == ReductionOrder::Leftmost ? descents.front() : descents[rng() % descents.size()];
    const int a = w[p];
    const int b = w[p + 1];
    for (const auto& [k, coeff] : sc_.bracket[a][b]) {
      std::vector<int> shorter(w.begin(), w.begin() + static_cast<long>(p));
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(p) + 2, w.end());
      push(std::move(shorter), c * coeff);
    }
    std::swap(w[p], w[p + 1]);
    push(std::move(w), c);
  }
  return out;
}

EnvElement Algebra::antipode(const EnvElement& u) const {
  const int ng = num_generators();
  EnvElement out;
  for (const auto& [m, c] : u.terms()) {
    // Build x_k ... x_1 by left-multiplying the PBW word in its own order.
    int degree = 0;
    EnvElement cur = one();
    for (int g = 0; g < ng; ++g) {
      for (int e = 0; e < m[g]; ++e) {
        EnvElement next;
        for (const auto& [t, tc] : cur.terms()) left_mul_into(g, t, tc, next);
        cur = std::move(next);
        ++degree;
      }
    }
    out.add_scaled(cur, degree % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

std::string Algebra::format(const EnvElement& u) const {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : u.terms()) {
    std::string mono;
    for (int g = 0; g < num_generators(); ++g) {
      if (m[g] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += to_string(generator_at(g));
      if (m[g] > 1) mono += '^' + std::to_string(m[g]);
    }
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0 && !mono.empty() && a == -1) {
      os << '-';
      a = 1;
    }
    if (mono.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << ' ';
      os << mono;
    }
    first = false;
  }
  return os.str();
}

std::size_t Algebra::memo_size() const {
  std::shared_lock lock(memo_mutex_);
  return memo_.size();
}

}  // namespace bgg
