#include "support.hpp"

#include <functional>
#include <sstream>

namespace bgg::testing {

void PropertyResult::check(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  if (failures++ == 0) first_failure = what;
}

PropertyResult& PropertyResult::operator+=(const PropertyResult& o) {
  if (failures == 0 && o.failures > 0) first_failure = o.first_failure;
  cases += o.cases;
  failures += o.failures;
  return *this;
}

std::vector<SystemSpec> all_systems() {
  return {{Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::A, 4}, {Series::B, 2},
          {Series::B, 3}, {Series::C, 2}, {Series::C, 3}, {Series::D, 4}, {Series::G, 2}};
}

std::shared_ptr<const Algebra> make_algebra(Series s, int rank) {
  return std::make_shared<const Algebra>(build_root_system(s, rank));
}

Rational random_rational(Rng& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  int n = 0;
  while (n == 0) n = num(rng);
  Rational q(n, den(rng));
  q.canonicalize();
  return q;
}

EnvElement random_element(const Algebra& alg, Rng& rng, int max_terms, int max_len) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, alg.num_generators() - 1);
  EnvElement out;
  for (int t = terms(rng); t > 0; --t) {
    std::vector<Generator> word;
    for (int k = len(rng); k > 0; --k) word.push_back(alg.generator_at(gen(rng)));
    out.add_scaled(alg.normal_order(word), random_rational(rng));
  }
  return out;
}

namespace {

MultiIndex random_exponents(int r, Rng& rng, int max_degree) {
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> root(0, r - 1);
  MultiIndex n(r, 0);
  for (int d = degree(rng); d > 0; --d) ++n[root(rng)];
  return n;
}

}  // namespace

EnvElement random_positive_element(const Algebra& alg, Rng& rng, int max_terms, int max_degree) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  EnvElement out;
  for (int t = terms(rng); t > 0; --t)
    out.add_scaled(alg.e_monomial(random_exponents(alg.num_positive(), rng, max_degree)), random_rational(rng));
  return out;
}

VermaVector random_verma_vector(const Algebra& alg, Rng& rng, int max_terms, int max_degree) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  VermaVector out;
  for (int t = terms(rng); t > 0; --t)
    out.add(random_exponents(alg.num_positive(), rng, max_degree), random_rational(rng));
  return out;
}

PolyElement random_poly(const Algebra& alg, Rng& rng, int max_terms, int max_degree) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  PolyElement out;
  for (int t = terms(rng); t > 0; --t)
    out.add(random_exponents(alg.num_positive(), rng, max_degree), random_rational(rng));
  return out;
}

PolyElement random_block_poly(const PolySpace& space, const Weight& nu, Rng& rng) {
  PolyElement f;
  std::bernoulli_distribution keep(0.7);
  for (const auto& m : space.block_basis(nu))
    if (keep(rng)) f.add(m, random_rational(rng));
  return f;
}

Weight random_dominant(int rank, Rng& rng, int bound) {
  std::uniform_int_distribution<int> c(0, bound);
  Weight w{std::vector<int>(rank)};
  for (auto& x : w.coords) x = c(rng);
  return w;
}

std::uint64_t brute_kostant(const RootSystem& rs, const Root& beta) {
  const auto& roots = rs.positive_roots();
  std::function<std::uint64_t(int, const Root&)> count = [&](int k, const Root& rest) -> std::uint64_t {
    if (k < 0) return rest.is_zero() ? 1 : 0;
    std::uint64_t total = 0;
    for (Root r = rest; r.is_nonnegative(); r -= roots[k]) total += count(k - 1, r);
    return total;
  };
  if (!beta.is_nonnegative()) return 0;
  return count(static_cast<int>(roots.size()) - 1, beta);
}

std::size_t gauss_rank(const linalg::Matrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

Sl2Irrep sl2_irrep(int n) {
  const std::size_t d = n + 1;
  Sl2Irrep rep{n, linalg::Matrix(d, d), linalg::Matrix(d, d), linalg::Matrix(d, d)};
  // basis v_0 .. v_n, v_0 highest
  for (int k = 0; k <= n; ++k) {
    rep.H(k, k) = n - 2 * k;
    if (k < n) rep.F(k + 1, k) = k + 1;
    if (k > 0) rep.E(k - 1, k) = n - k + 1;
  }
  return rep;
}

linalg::Matrix represent(const Algebra& sl2, const EnvElement& u, const Sl2Irrep& rep) {
  const std::size_t d = rep.n + 1;
  linalg::Matrix out(d, d);
  for (const auto& [key, c] : u.terms()) {
    linalg::Matrix term(d, d);
    for (std::size_t i = 0; i < d; ++i) term(i, i) = 1;
    const linalg::Matrix* gens[3] = {&rep.E, &rep.H, &rep.F};
    for (int g = 0; g < sl2.num_generators(); ++g)
      for (int e = 0; e < key[g]; ++e) term = linalg::multiply(term, *gens[g]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out(i, j) += c * term(i, j);
  }
  return out;
}

std::uint64_t kostant_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& nu) {
  const Weight shifted = nu + rs.rho();
  long long total = 0;
  for (const auto& w : rs.weyl()) {
    auto gap = rs.to_root(w.apply(lambda + rs.rho()) - shifted);
    if (!gap || !gap->is_nonnegative()) continue;
    long long p = static_cast<long long>(brute_kostant(rs, *gap));
    total += (w.length % 2 == 0) ? p : -p;
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t type_a_dimension(const Weight& lambda) {
  const int n = static_cast<int>(lambda.coords.size());
  Rational dim = 1;
  for (int i = 0; i < n; ++i) {
    long partial = 0;
    for (int j = i; j < n; ++j) {
      partial += lambda.coords[j] + 1;
      Rational factor(partial, static_cast<long>(j - i + 1));
      factor.canonicalize();
      dim *= factor;
    }
  }
  return dim.get_num().get_ui();
}

PropertyResult jacobi_exhaustive(const Algebra& alg) {
  PropertyResult res;
  const int n = alg.num_generators();
  std::vector<EnvElement> g;
  for (int i = 0; i < n; ++i) g.push_back(alg.element(alg.generator_at(i)));
  auto br = [&](const EnvElement& a, const EnvElement& b) { return alg.commutator(a, b); };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      res.check(br(g[x], g[y]) == -br(g[y], g[x]), "antisymmetry " + std::to_string(x) + "," + std::to_string(y));
      for (int z = y + 1; z < n; ++z) {
        EnvElement j = br(g[x], br(g[y], g[z])) + br(g[y], br(g[z], g[x])) + br(g[z], br(g[x], g[y]));
        res.check(j.is_zero(), "jacobi " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
      }
    }
  }
  return res;
}

PropertyResult pbw_associativity(const Algebra& alg, Rng& rng, int trials) {
  PropertyResult res;
  for (int t = 0; t < trials; ++t) {
    EnvElement a = random_element(alg, rng), b = random_element(alg, rng), c = random_element(alg, rng);
    res.check(alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c)),
              "(ab)c != a(bc) for a = " + alg.format(a) + ", b = " + alg.format(b) + ", c = " + alg.format(c));
  }
  return res;
}

PropertyResult normal_order_routes(const Algebra& alg, Rng& rng, int trials) {
  PropertyResult res;
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<int> gen(0, alg.num_generators() - 1);
  for (int t = 0; t < trials; ++t) {
    std::vector<Generator> word;
    for (int k = len(rng); k > 0; --k) word.push_back(alg.generator_at(gen(rng)));
    EnvElement left = alg.normal_order(word);
    EnvElement shuffled = alg.normal_order(word, ReductionOrder::Shuffled, rng());
    EnvElement product = alg.one();
    for (Generator g : word) product = alg.multiply(product, alg.element(g));
    std::string w;
    for (Generator g : word) w += to_string(g) + " ";
    res.check(left == shuffled, "rewriting orders disagree on " + w);
    res.check(left == product, "normal_order differs from multiply on " + w);
  }
  return res;
}

PropertyResult antipode_reverses_products(const Algebra& alg, Rng& rng, int trials) {
  PropertyResult res;
  for (int t = 0; t < trials; ++t) {
    EnvElement a = random_element(alg, rng), b = random_element(alg, rng);
    res.check(alg.antipode(alg.multiply(a, b)) == alg.multiply(alg.antipode(b), alg.antipode(a)),
              "S(ab) != S(b)S(a) for a = " + alg.format(a) + ", b = " + alg.format(b));
    res.check(alg.antipode(alg.antipode(a)) == a, "S(S(a)) != a for a = " + alg.format(a));
  }
  return res;
}

namespace {

void monomials_up_to(const RootSystem& rs, int max_height, std::size_t k, int used, MultiIndex& cur,
                     std::vector<MultiIndex>& out) {
  if (k == rs.num_positive()) {
    out.push_back(cur);
    return;
  }
  const int h = rs.positive_roots()[k].height();
  for (int e = 0; used + e * h <= max_height; ++e) {
    cur[k] = e;
    monomials_up_to(rs, max_height, k + 1, used + e * h, cur, out);
  }
  cur[k] = 0;
}

void roots_up_to(int rank, int max_height, int i, int used, Root& cur, std::vector<Root>& out) {
  if (i == rank) {
    out.push_back(cur);
    return;
  }
  for (int c = 0; used + c <= max_height; ++c) {
    cur.coords[i] = c;
    roots_up_to(rank, max_height, i + 1, used + c, cur, out);
  }
  cur.coords[i] = 0;
}

std::vector<Root> cone_up_to(const RootSystem& rs, int max_height) {
  std::vector<Root> out;
  Root cur{std::vector<int>(rs.rank(), 0)};
  roots_up_to(rs.rank(), max_height, 0, 0, cur, out);
  return out;
}

}  // namespace

PropertyResult dual_basis_exhaustive(const Algebra& alg, int max_height) {
  PropertyResult res;
  std::vector<MultiIndex> monos;
  MultiIndex cur(alg.num_positive(), 0);
  monomials_up_to(alg.roots(), max_height, 0, 0, cur, monos);
  for (const auto& n : monos) {
    const EnvElement e = alg.e_monomial(n);
    for (const auto& m : monos) {
      Rational p = pairing(alg, e, zeta_of_dual_basis(m));
      res.check(p == (n == m ? 1 : 0), "pairing of distinct or equal monomials is not a Kronecker delta");
    }
  }
  return res;
}

PropertyResult verma_dims_match_kostant(const std::shared_ptr<const Algebra>& alg, int max_height) {
  PropertyResult res;
  const RootSystem& rs = alg->roots();
  VermaModule m(alg, rs.zero_weight());
  for (const auto& beta : cone_up_to(rs, max_height)) {
    std::size_t dim = m.weight_space_basis(rs.to_weight(beta)).size();
    res.check(dim == kostant_partition(rs, beta) && dim == brute_kostant(rs, beta),
              "weight-space dimension mismatch at " + to_string(beta));
  }
  return res;
}

PropertyResult hom_equivariance(const VermaModule& source, const VermaModule& target, const VermaHom& h, Rng& rng,
                                int trials) {
  PropertyResult res;
  const Algebra& alg = source.algebra();
  for (int t = 0; t < trials; ++t) {
    VermaVector v = random_verma_vector(alg, rng);
    VermaVector image = apply_hom(h, v, target);
    for (int g = 0; g < alg.num_generators(); ++g) {
      Generator gen = alg.generator_at(g);
      res.check(apply_hom(h, source.act(gen, v), target) == target.act(gen, image),
                "hom does not commute with " + to_string(gen));
    }
  }
  return res;
}

namespace {

Weight random_block_weight(const PolySpace& space, Rng& rng, int max_height) {
  const RootSystem& rs = space.algebra().roots();
  auto cone = cone_up_to(rs, max_height);
  std::uniform_int_distribution<std::size_t> pick(0, cone.size() - 1);
  return space.mu() - rs.to_weight(cone[pick(rng)]);
}

}  // namespace

PropertyResult psi_pol_equivariance(const EnvElement& u, const PolySpace& source, const PolySpace& target, Rng& rng,
                                    int trials, int max_height) {
  PropertyResult res;
  const Algebra& alg = source.algebra();
  for (int t = 0; t < trials; ++t) {
    PolyElement f = random_block_poly(source, random_block_weight(source, rng, max_height), rng);
    PolyElement image = psi_pol(u, f, source, target);
    for (int g = 0; g < alg.num_generators(); ++g) {
      Generator gen = alg.generator_at(g);
      res.check(psi_pol(u, dual_act(source, gen, f), source, target) == dual_act(target, gen, image),
                "psi_pol does not commute with " + to_string(gen));
    }
  }
  return res;
}

PropertyResult psi_pol_preserves_weight(const EnvElement& u, const PolySpace& source, const PolySpace& target,
                                        Rng& rng, int trials, int max_height) {
  PropertyResult res;
  for (int t = 0; t < trials; ++t) {
    Weight nu = random_block_weight(source, rng, max_height);
    PolyElement image = psi_pol(u, random_block_poly(source, nu, rng), source, target);
    auto parts = weight_components(target, image);
    res.check(parts.empty() || (parts.size() == 1 && parts.begin()->first == nu),
              "psi_pol moved weight " + to_string(nu));
  }
  return res;
}

PropertyResult edge_vectors_singular(const BGGComplex& complex) {
  PropertyResult res;
  const RootSystem& rs = complex.roots();
  for (const auto& e : complex.edges()) {
    const VermaModule& m = complex.space(e.from).verma();
    VermaVector v = m.collapse(e.u_psi);
    bool ok = !v.is_zero();
    for (const auto& [n, c] : v.terms()) ok = ok && m.weight_of(n) == -complex.space(e.to).mu();
    for (int i = 0; i < rs.rank(); ++i) ok = ok && m.act(F(i), v).is_zero();
    res.check(ok, "edge vector is not singular: " + complex.algebra().format(e.u_psi));
  }
  return res;
}

PropertyResult differential_equivariance(const BGGComplex& complex, Rng& rng, int trials, int max_height) {
  PropertyResult res;
  const Algebra& alg = complex.algebra();
  const RootSystem& rs = complex.roots();
  auto cone = cone_up_to(rs, max_height);
  std::uniform_int_distribution<std::size_t> pick(0, cone.size() - 1);
  std::uniform_int_distribution<int> pos(0, complex.top_position() - 1);
  for (int t = 0; t < trials; ++t) {
    const int i = pos(rng);
    const Weight nu = complex.lambda() - rs.to_weight(cone[pick(rng)]);
    std::vector<PolyElement> x;
    for (std::size_t w : complex.term(i)) x.push_back(random_block_poly(complex.space(w), nu, rng));
    auto dx = complex.apply_differential(i, x);
    for (int g = 0; g < alg.num_generators(); ++g) {
      Generator gen = alg.generator_at(g);
      std::vector<PolyElement> gx, gdx;
      for (std::size_t k = 0; k < x.size(); ++k) gx.push_back(dual_act(complex.space(complex.term(i)[k]), gen, x[k]));
      for (std::size_t k = 0; k < dx.size(); ++k)
        gdx.push_back(dual_act(complex.space(complex.term(i + 1)[k]), gen, dx[k]));
      res.check(complex.apply_differential(i, gx) == gdx,
                "d does not commute with " + to_string(gen) + " at position " + std::to_string(i));
    }
  }
  return res;
}

PropertyResult gauge_independence(const BGGComplex& assembled, int cutoff) {
  PropertyResult res;
  auto first = verify_all(fix_signs(assembled, Gauge::FirstLowerCover), cutoff);
  auto last = verify_all(fix_signs(assembled, Gauge::LastLowerCover), cutoff);
  res.check(first.blocks.size() == last.blocks.size(), "block lists differ");
  for (std::size_t b = 0; b < std::min(first.blocks.size(), last.blocks.size()); ++b) {
    const auto &x = first.blocks[b], &y = last.blocks[b];
    res.check(x.nu == y.nu && x.dims == y.dims && x.ranks == y.ranks && x.exact_at == y.exact_at &&
                  x.kernel0_dim == y.kernel0_dim && x.d_squared_zero == y.d_squared_zero,
              "gauges disagree at " + to_string(x.nu));
  }
  res.check(first.verdict == last.verdict && first.kernel0_total == last.kernel0_total, "gauge verdicts differ");
  return res;
}

PropertyResult d_squared_zero(const ComplexReport& report) {
  PropertyResult res;
  for (const auto& b : report.blocks) res.check(b.d_squared_zero, "d o d != 0 at " + to_string(b.nu));
  return res;
}

}  // namespace bgg::testing
