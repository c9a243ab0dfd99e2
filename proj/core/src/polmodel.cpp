#include "bgg/polmodel.hpp"

#include "bgg/errors.hpp"

namespace bgg {
namespace {

Root root_weight(const RootSystem& rs, const MultiIndex& m) {
  Root r{std::vector<int>(rs.rank(), 0)};
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] != 0) r += m[k] * rs.positive_roots()[k];
  }
  return r;
}

Root generator_weight(const RootSystem& rs, Generator g) {
  switch (g.kind) {
    case GenKind::E: return rs.positive_roots()[g.index];
    case GenKind::F: return -rs.positive_roots()[g.index];
    case GenKind::H: break;
  }
  return Root{std::vector<int>(rs.rank(), 0)};
}

MultiIndex pad(const Algebra& alg, const MultiIndex& e) {
  MultiIndex m(alg.num_generators(), 0);
  std::copy(e.begin(), e.end(), m.begin());
  return m;
}

// Common weight of a homogeneous element of U(n).
Root homogeneous_weight(const Algebra& alg, const EnvElement& u) {
  if (u.is_zero()) throw InvalidInput("psi_pol: u_psi is zero");
  if (!alg.in_positive_part(u)) throw InvalidInput("psi_pol: u_psi must lie in U(n)");
  std::optional<Root> w;
  for (const auto& [m, c] : u.terms()) {
    Root t = alg.weight_of(m);
    if (w && *w != t) throw InvalidInput("psi_pol: u_psi is not a weight vector");
    w = std::move(t);
  }
  return *w;
}

}  // namespace

PolySpace::PolySpace(std::shared_ptr<const Algebra> algebra, Weight mu) : verma_(std::move(algebra), std::move(mu)) {}

Weight PolySpace::weight_of(const MultiIndex& m) const {
  const RootSystem& rs = algebra().roots();
  return mu() - rs.to_weight(root_weight(rs, m));
}

std::vector<MultiIndex> PolySpace::block_basis(const Weight& nu) const {
  const RootSystem& rs = algebra().roots();
  auto beta = rs.to_root(mu() - nu);
  if (!beta) return {};
  return monomials_of_weight(rs, *beta);
}

PolyElement zeta_of_dual_basis(const MultiIndex& m) {
  Rational c(Integer(1), multi_factorial(m));
  return PolyElement(m, c);
}

Rational pairing(const Algebra& algebra, const EnvElement& u, const PolyElement& f) {
  if (!algebra.in_positive_part(u)) throw InvalidInput("pairing: u must lie in U(n)");
  Rational s = 0;
  for (const auto& [m, c] : u.terms()) {
    const MultiIndex n = algebra.e_exponents(m);
    const Rational fc = f.coeff(n);
    if (fc != 0) s += c * fc * Rational(multi_factorial(n));
  }
  return s;
}

Rational pairing(const VermaVector& v, const PolyElement& f) {
  Rational s = 0;
  for (const auto& [n, c] : v.terms()) {
    const Rational fc = f.coeff(n);
    if (fc != 0) s += c * fc * Rational(multi_factorial(n));
  }
  return s;
}

PolyElement dual_act(const PolySpace& space, Generator g, const PolyElement& f) {
  const RootSystem& rs = space.algebra().roots();
  const Root shift = generator_weight(rs, g);
  PolyElement out;
  // Group source terms by weight so each target basis vector is acted on once.
  std::map<Root, std::vector<std::pair<MultiIndex, Rational>>> by_weight;
  for (const auto& [m, c] : f.terms()) by_weight[root_weight(rs, m)].emplace_back(m, c);
  for (const auto& [beta, terms] : by_weight) {
    for (const auto& n : monomials_of_weight(rs, beta - shift)) {
      const VermaVector gv = space.verma().act(g, VermaVector(n, 1));
      Rational s = 0;
      for (const auto& [m, c] : terms) {
        const Rational a = gv.coeff(m);
        if (a != 0) s += a * Rational(multi_factorial(m)) * c;
      }
      if (s != 0) out.add(n, -s / Rational(multi_factorial(n)));
    }
  }
  return out;
}

std::map<Weight, PolyElement> weight_components(const PolySpace& space, const PolyElement& f) {
  std::map<Weight, PolyElement> out;
  for (const auto& [m, c] : f.terms()) out[space.weight_of(m)].add(m, c);
  return out;
}

linalg::Matrix psi_pol_block(const Algebra& algebra, const EnvElement& u_psi, const std::vector<MultiIndex>& source_basis,
                             const std::vector<MultiIndex>& target_basis) {
  linalg::Matrix out(target_basis.size(), source_basis.size());
  if (source_basis.empty() || target_basis.empty()) return out;
  std::map<MultiIndex, std::size_t> col_of;
  for (std::size_t j = 0; j < source_basis.size(); ++j) col_of[pad(algebra, source_basis[j])] = j;
  for (std::size_t i = 0; i < target_basis.size(); ++i) {
    const MultiIndex& n = target_basis[i];
    const Rational inv_nf(Integer(1), multi_factorial(n));
    const EnvElement product = algebra.multiply(algebra.e_monomial(n), u_psi);
    for (const auto& [m, c] : product.terms()) {
      auto it = col_of.find(m);
      if (it == col_of.end()) continue;
      out(i, it->second) = c * Rational(multi_factorial(source_basis[it->second])) * inv_nf;
    }
  }
  return out;
}

PolyElement psi_pol(const EnvElement& u_psi, const PolyElement& f, const PolySpace& source, const PolySpace& target) {
  const Algebra& alg = source.algebra();
  const RootSystem& rs = alg.roots();
  const Root shift = homogeneous_weight(alg, u_psi);
  if (rs.to_weight(shift) != source.mu() - target.mu()) {
    throw InvalidInput("psi_pol: u_psi has weight " + to_string(shift) + " but the spaces differ by " +
                       to_string(source.mu() - target.mu()));
  }
  std::map<Root, std::vector<MultiIndex>> by_weight;
  for (const auto& [m, c] : f.terms()) by_weight[root_weight(rs, m)].push_back(m);
  PolyElement out;
  for (const auto& [beta, sources] : by_weight) {
    const auto targets = monomials_of_weight(rs, beta - shift);
    const auto block = psi_pol_block(alg, u_psi, sources, targets);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < sources.size(); ++j) {
        if (block(i, j) != 0) s += block(i, j) * f.coeff(sources[j]);
      }
      out.add(targets[i], s);
    }
  }
  return out;
}

std::vector<Weight> weights_below(const RootSystem& rs, const Weight& lambda, int max_height) {
  const int n = rs.rank();
  std::vector<Weight> out;
  for (int h = 0; h <= max_height; ++h) {
    // Compositions of h into n nonnegative parts, lexicographically increasing.
    std::vector<int> parts(n, 0);
    std::vector<std::vector<int>> level;
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == n - 1) {
        parts[i] = left;
        level.push_back(parts);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        parts[i] = v;
        self(self, i + 1, left - v);
      }
    };
    rec(rec, 0, h);
    for (const auto& p : level) out.push_back(lambda - rs.to_weight(Root{p}));
  }
  return out;
}

std::vector<KernelBlock> embed_V(std::shared_ptr<const Algebra> algebra, const Weight& lambda) {
  const RootSystem& rs = algebra->roots();
  if (!rs.is_dominant(lambda)) throw InvalidInput("embed_V: highest weight must be dominant");
  const PolySpace space(algebra, lambda);
  const VermaModule top(algebra, lambda);

  // s_i . lambda = lambda - (lambda_i + 1) alpha_i
  std::vector<EnvElement> maps;
  std::vector<PolySpace> targets;
  for (int i = 0; i < rs.rank(); ++i) {
    Weight s_lambda = lambda;
    const Weight alpha = rs.to_weight(rs.simple_root(i));
    for (int k = 0; k < rs.rank(); ++k) s_lambda.coords[k] -= (lambda.coords[i] + 1) * alpha.coords[k];
    auto hom = find_singular_vector(top, s_lambda);
    if (!hom) throw InternalError("embed_V: no singular vector for simple reflection " + std::to_string(i + 1));
    maps.push_back(std::move(hom->u_psi));
    targets.emplace_back(algebra, s_lambda);
  }

  const Root span = *rs.to_root(lambda - rs.weyl()[rs.longest_element()].apply(lambda));
  std::vector<KernelBlock> out;
  for (const auto& nu : weights_below(rs, lambda, span.height())) {
    const auto basis = space.block_basis(nu);
    if (basis.empty()) continue;
    std::vector<linalg::Matrix> blocks;
    std::size_t rows = 0;
    for (std::size_t k = 0; k < maps.size(); ++k) {
      blocks.push_back(psi_pol_block(*algebra, maps[k], basis, targets[k].block_basis(nu)));
      rows += blocks.back().rows();
    }
    linalg::Matrix stacked(rows, basis.size());
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) stacked(r0 + i, j) = b(i, j);
      }
      r0 += b.rows();
    }
    KernelBlock kb{nu, {}};
    for (const auto& x : linalg::kernel(stacked)) {
      PolyElement f;
      for (std::size_t j = 0; j < basis.size(); ++j) f.add(basis[j], x[j]);
      kb.basis.push_back(std::move(f));
    }
    if (!kb.basis.empty()) out.push_back(std::move(kb));
  }
  return out;
}

}  // namespace bgg
