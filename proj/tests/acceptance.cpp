// One pass/fail line per acceptance criterion, all checks exact.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace bgg;
using namespace bgg::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

BGGComplex build(Series s, int rank, const Weight& lambda) {
  return fix_signs(assemble(make_algebra(s, rank), lambda));
}

void require_blocks(Outcome& o, const ComplexReport& rep, const std::string& label) {
  for (const auto& b : rep.blocks) {
    o.require(b.all_exact(), label + " inexact at " + to_string(b.nu));
    o.require(b.euler_char == static_cast<long>(b.v_multiplicity), label + " euler mismatch at " + to_string(b.nu));
    o.require(b.kernel0_dim == b.v_multiplicity, label + " kernel0 mismatch at " + to_string(b.nu));
    o.require(b.d_squared_zero, label + " d o d != 0 at " + to_string(b.nu));
    o.require(b.kostant_dims_match, label + " term dimension mismatch at " + to_string(b.nu));
  }
  o.require(rep.verdict, label + " verdict false");
}

void require_property(Outcome& o, const PropertyResult& r, const std::string& label) {
  o.require(r.passed(), label + (r.first_failure.empty() ? " ran no cases" : ": " + r.first_failure));
  o.detail << label << " " << r.cases << "; ";
}

Outcome sl2_suite() {
  Outcome o;
  auto alg = make_algebra(Series::A, 1);
  for (int m = 0; m <= 5; ++m) {
    auto start = Clock::now();
    auto c = fix_signs(assemble(alg, Weight{{m}}));
    o.require(c.edges().size() == 1 && c.edges()[0].u_psi == alg->e_monomial({m + 1}) && c.edges()[0].scalar == 1,
              "edge vector for m=" + std::to_string(m));
    const int cutoff = 2 * m + 6;
    for (int h = 0; h <= cutoff; ++h) {
      Weight nu{{m - 2 * h}};
      auto d = c.differential_block(0, nu);
      const bool hits = h >= m + 1;
      o.require(d.cols() == 1 && d.rows() == (hits ? 1u : 0u), "block shape m=" + std::to_string(m));
      if (hits && d.rows() == 1)
        o.require(d(0, 0) == Rational(factorial(h) / factorial(h - m - 1)),
                  "derivative coefficient m=" + std::to_string(m) + " n=" + std::to_string(h));
    }
    auto rep = verify_all(c, cutoff);
    require_blocks(o, rep, "A1 m=" + std::to_string(m));
    o.require(rep.kernel0_total == static_cast<std::size_t>(m + 1), "kernel0 total m=" + std::to_string(m));
    double t = seconds_since(start);
    o.require(t < 1.0, "runtime m=" + std::to_string(m));
    o.detail << "m=" << m << " " << std::fixed << std::setprecision(3) << t << "s; ";
  }
  return o;
}

Outcome a2_adjoint() {
  Outcome o;
  auto start = Clock::now();
  Weight lambda{{1, 1}};
  auto c = build(Series::A, 2, lambda);
  auto rep = verify_all(c, 12, 1);
  require_blocks(o, rep, "A2 (1,1)");
  o.require(rep.kernel0_total == 8, "kernel0 total");
  bool zero_seen = false;
  for (const auto& b : rep.blocks) {
    o.require(b.euler_char == static_cast<long>(freudenthal_multiplicity(c.roots(), lambda, b.nu)),
              "euler vs Freudenthal at " + to_string(b.nu));
    if (b.nu == Weight{{0, 0}}) {
      zero_seen = true;
      o.require(b.euler_char == 2, "euler at zero weight");
    }
  }
  o.require(zero_seen, "zero weight block present");
  double t = seconds_since(start);
  o.require(t < 60.0, "runtime");
  o.detail << rep.blocks.size() << " blocks, kernel0 " << rep.kernel0_total << ", " << std::fixed
           << std::setprecision(3) << t << "s";
  return o;
}

Outcome trivial_reps() {
  Outcome o;
  auto start = Clock::now();
  for (SystemSpec s : {SystemSpec{Series::A, 2}, SystemSpec{Series::A, 3}, SystemSpec{Series::B, 2},
                       SystemSpec{Series::G, 2}}) {
    auto rs = build_root_system(s.series, s.rank);
    auto rep = verify_all(build(s.series, s.rank, rs->zero_weight()), 8);
    require_blocks(o, rep, s.name());
    o.require(rep.kernel0_total == 1, s.name() + " kernel0 total");
    o.detail << s.name() << " " << rep.blocks.size() << " blocks; ";
  }
  double t = seconds_since(start);
  o.require(t < 300.0, "runtime");
  o.detail << std::fixed << std::setprecision(3) << t << "s";
  return o;
}

Outcome b2_vector() {
  Outcome o;
  auto start = Clock::now();
  Weight lambda{{1, 0}};
  auto c = build(Series::B, 2, lambda);
  auto rep = verify_all(c, 10);
  require_blocks(o, rep, "B2 (1,0)");
  o.require(rep.kernel0_total == weyl_dimension(c.roots(), lambda), "kernel0 total vs Weyl dimension");
  for (const auto& b : rep.blocks)
    o.require(b.kernel0_dim == freudenthal_multiplicity(c.roots(), lambda, b.nu), "kernel0 at " + to_string(b.nu));
  double t = seconds_since(start);
  o.require(t < 300.0, "runtime");
  o.detail << "kernel0 " << rep.kernel0_total << " = dim " << weyl_dimension(c.roots(), lambda) << ", " << std::fixed
           << std::setprecision(3) << t << "s";
  return o;
}

// Dominant weights exercised per system: zero, each fundamental weight, rho, 2 omega_1.
std::vector<Weight> test_matrix(int rank) {
  std::vector<Weight> out{Weight{std::vector<int>(rank, 0)}, Weight{std::vector<int>(rank, 1)}};
  for (int i = 0; i < rank; ++i) {
    Weight w{std::vector<int>(rank, 0)};
    w.coords[i] = 1;
    out.push_back(w);
  }
  Weight two{std::vector<int>(rank, 0)};
  two.coords[0] = 2;
  out.push_back(two);
  return out;
}

Outcome simple_closed_form() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& s : all_systems()) {
    auto alg = make_algebra(s.series, s.rank);
    const RootSystem& rs = alg->roots();
    for (const auto& lambda : test_matrix(s.rank)) {
      VermaModule m(alg, lambda);
      for (int i = 0; i < s.rank; ++i) {
        const int k = rs.coroot_pairing(lambda + rs.rho(), i);
        Weight sought = lambda - rs.to_weight(k * rs.simple_root(i));
        auto h = find_singular_vector(m, sought);
        MultiIndex n(rs.num_positive(), 0);
        n[i] = k;
        o.require(h && h->u_psi == alg->e_monomial(n), s.name() + " " + to_string(lambda) + " root " +
                                                            std::to_string(i + 1));
        ++checked;
      }
    }
  }
  o.detail << checked << " simple edges";
  return o;
}

Outcome property_suites() {
  Outcome o;
  Rng rng(20261016);
  PropertyResult jacobi, assoc, antipode, delta;
  for (const auto& s : all_systems()) {
    auto alg = make_algebra(s.series, s.rank);
    jacobi += jacobi_exhaustive(*alg);
    delta += dual_basis_exhaustive(*alg, s.rank <= 2 ? 5 : 3);
  }
  std::vector<SystemSpec> small{{Series::A, 1}, {Series::A, 2}, {Series::B, 2}, {Series::C, 2}, {Series::G, 2},
                                {Series::A, 3}, {Series::B, 3}, {Series::C, 3}, {Series::D, 4}, {Series::A, 4}};
  for (int t = 0; t < 200; ++t) {
    const auto& s = small[t % small.size()];
    auto alg = make_algebra(s.series, s.rank);
    assoc += pbw_associativity(*alg, rng, 1);
    antipode += antipode_reverses_products(*alg, rng, 1);
  }
  require_property(o, jacobi, "jacobi");
  require_property(o, assoc, "associativity");
  require_property(o, antipode, "antipode");
  require_property(o, delta, "dual-basis");

  PropertyResult homs, pols, weights, dd, gauge;
  for (const auto& [spec, lambda] : std::vector<std::pair<SystemSpec, Weight>>{
           {{Series::A, 2}, Weight{{1, 1}}}, {{Series::B, 2}, Weight{{1, 0}}}, {{Series::G, 2}, Weight{{0, 0}}}}) {
    auto alg = make_algebra(spec.series, spec.rank);
    auto assembled = assemble(alg, lambda);
    auto c = fix_signs(assembled);
    const RootSystem& rs = c.roots();
    for (const auto& e : c.edges()) {
      if (rs.weyl()[e.from].length > 1) continue;
      const PolySpace &source = c.space(e.from), &target = c.space(e.to);
      VermaHom h{e.u_psi, target.mu(), source.mu()};
      homs += hom_equivariance(target.verma(), source.verma(), h, rng, 50);
      pols += psi_pol_equivariance(e.u_psi, source, target, rng, 50, 4);
      weights += psi_pol_preserves_weight(e.u_psi, source, target, rng, 50, 6);
    }
    dd += d_squared_zero(verify_all(c, 8));
    gauge += gauge_independence(assembled, 8);
  }
  require_property(o, homs, "hom-equivariance");
  require_property(o, pols, "psi_pol-equivariance");
  require_property(o, weights, "weight-preservation");
  require_property(o, dd, "d^2=0");
  require_property(o, gauge, "gauge-independence");
  return o;
}

Outcome oracle_cross_checks() {
  Outcome o;
  PropertyResult dims;
  std::size_t lambdas = 0;
  for (const auto& s : all_systems()) {
    auto alg = make_algebra(s.series, s.rank);
    dims += verma_dims_match_kostant(alg, s.rank <= 2 ? 10 : 5);
    for (const auto& lambda : test_matrix(s.rank)) {
      std::uint64_t total = 0;
      for (const auto& [nu, m] : weight_multiplicities(alg->roots(), lambda)) {
        total += m;
        if (s.rank <= 2) o.require(m == freudenthal_multiplicity(alg->roots(), lambda, nu), "multiplicity table");
      }
      o.require(total == weyl_dimension(alg->roots(), lambda), s.name() + " " + to_string(lambda));
      ++lambdas;
    }
  }
  require_property(o, dims, "verma-dims");
  o.detail << "sum of multiplicities = Weyl dimension for " << lambdas << " weights";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"A1 suite: d0 = (d/dT)^(m+1), exact blocks, kernel0 = m+1 for m = 0..5", sl2_suite},
      {"A2 lambda=(1,1): exact to height 12, kernel0 8, Euler = Freudenthal", a2_adjoint},
      {"lambda=0 in A2, A3, B2, G2: exact to height 8, kernel0 1", trivial_reps},
      {"B2 lambda=(1,0): exact to height 10, kernel0 = Weyl dimension", b2_vector},
      {"simple edges carry E_alpha^<lambda+rho, alpha^vee>", simple_closed_form},
      {"property suites", property_suites},
      {"oracle cross-checks", oracle_cross_checks},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
              << o.detail.str() << "]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
