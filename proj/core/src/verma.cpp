#include "bgg/verma.hpp"

#include "bgg/errors.hpp"
#include "bgg/linalg.hpp"

namespace bgg {
namespace {

void enumerate(const std::vector<Root>& roots, std::size_t k, Root& remaining, MultiIndex& cur,
               std::vector<MultiIndex>& out) {
  if (k == roots.size()) {
    if (remaining.is_zero()) out.push_back(cur);
    return;
  }
  const Root& alpha = roots[k];
  int count = 0;
  while (remaining.is_nonnegative()) {
    cur[k] = count;
    enumerate(roots, k + 1, remaining, cur, out);
    remaining -= alpha;
    ++count;
  }
  remaining += count * alpha;
  cur[k] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_of_weight(const RootSystem& rs, const Root& beta) {
  std::vector<MultiIndex> out;
  if (!beta.is_nonnegative()) return out;
  Root remaining = beta;
  MultiIndex cur(rs.num_positive(), 0);
  enumerate(rs.positive_roots(), 0, remaining, cur, out);
  return out;
}

VermaModule::VermaModule(std::shared_ptr<const Algebra> algebra, Weight nu)
    : algebra_(std::move(algebra)), nu_(std::move(nu)), cache_(std::make_shared<Cache>()) {
  if (static_cast<int>(nu_.coords.size()) != algebra_->roots().rank()) {
    throw InvalidInput("Verma weight has wrong length: " + to_string(nu_));
  }
}

Weight VermaModule::weight_of(const MultiIndex& n) const {
  const auto& pos = algebra_->roots().positive_roots();
  Root shift{std::vector<int>(algebra_->roots().rank(), 0)};
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n[k] != 0) shift += n[k] * pos[k];
  }
  return algebra_->roots().to_weight(shift) - nu_;
}

std::vector<MultiIndex> VermaModule::weight_space_basis(const Weight& weight) const {
  auto beta = algebra_->roots().to_root(weight + nu_);
  if (!beta) return {};
  return monomials_of_weight(algebra_->roots(), *beta);
}

VermaVector VermaModule::lowest_vector() const {
  return VermaVector(MultiIndex(algebra_->num_positive(), 0), 1);
}

VermaVector VermaModule::collapse(const EnvElement& u) const {
  const int r = algebra_->num_positive();
  const int l = algebra_->roots().rank();
  VermaVector out;
  for (const auto& [m, c] : u.terms()) {
    bool killed = false;
    for (int k = 0; k < r && !killed; ++k) killed = m[r + l + k] != 0;
    if (killed) continue;
    Rational coeff = c;
    for (int i = 0; i < l; ++i) {
      for (int e = 0; e < m[r + i]; ++e) coeff *= -nu_.coords[i];
    }
    out.add(MultiIndex(m.begin(), m.begin() + r), coeff);
  }
  return out;
}

void VermaModule::act_into(int gen, const MultiIndex& n, const Rational& c, VermaVector& out) const {
  const int r = algebra_->num_positive();
  const int l = algebra_->roots().rank();
  if (gen < r) {
    int j = 0;
    while (j < r && n[j] == 0) ++j;
    if (gen <= j) {
      MultiIndex t = n;
      ++t[gen];
      out.add(t, c);
      return;
    }
  } else if (gen < r + l) {
    out.add(n, c * weight_of(n).coords[gen - r]);
    return;
  }
  out.add_scaled(act_basis(gen, n), c);
}

const VermaVector& VermaModule::act_basis(int gen, const MultiIndex& n) const {
  MultiIndex key = n;
  key.push_back(gen);
  {
    std::shared_lock lock(cache_->mutex);
    if (auto it = cache_->table.find(key); it != cache_->table.end()) return it->second;
  }
  VermaVector value = compute_act(gen, n);
  std::unique_lock lock(cache_->mutex);
  return cache_->table.try_emplace(std::move(key), std::move(value)).first->second;
}

VermaVector VermaModule::compute_act(int gen, const MultiIndex& n) const {
  const int r = algebra_->num_positive();
  int j = 0;
  while (j < r && n[j] == 0) ++j;
  if (j == r) return {};  // F on the lowest vector
  // x E_j E^{n'} = E_j (x E^{n'}) + [x, E_j] E^{n'}
  MultiIndex rest = n;
  --rest[j];
  VermaVector moved;
  act_into(gen, rest, 1, moved);
  VermaVector out;
  for (const auto& [t, c] : moved.terms()) act_into(j, t, c, out);
  for (const auto& [k, c] : algebra_->constants().bracket[gen][j]) act_into(k, rest, Rational(c), out);
  return out;
}

VermaVector VermaModule::act(Generator g, const VermaVector& v) const {
  const int gen = algebra_->index_of(g);
  VermaVector out;
  for (const auto& [n, c] : v.terms()) act_into(gen, n, c, out);
  return out;
}

VermaVector VermaModule::act(const EnvElement& u, const VermaVector& v) const {
  const int ng = algebra_->num_generators();
  VermaVector out;
  for (const auto& [m, c] : u.terms()) {
    VermaVector cur = c * v;
    for (int g = ng - 1; g >= 0; --g) {
      for (int e = 0; e < m[g]; ++e) {
        VermaVector next;
        for (const auto& [n, nc] : cur.terms()) act_into(g, n, nc, next);
        cur = std::move(next);
      }
    }
    out += cur;
  }
  return out;
}

std::optional<VermaHom> find_singular_vector(const VermaModule& target, const Weight& sought_nu) {
  const Algebra& alg = target.algebra();
  const RootSystem& rs = alg.roots();
  auto beta = rs.to_root(target.nu() - sought_nu);
  if (!beta || !beta->is_nonnegative()) return std::nullopt;
  if (beta->is_zero()) return VermaHom{alg.one(), sought_nu, target.nu()};

  const auto basis = monomials_of_weight(rs, *beta);
  if (basis.empty()) return std::nullopt;

  std::vector<std::vector<MultiIndex>> lower(rs.rank());
  std::vector<std::map<MultiIndex, std::size_t>> row_of(rs.rank());
  std::size_t nrows = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    lower[i] = monomials_of_weight(rs, *beta - rs.simple_root(i));
    for (const auto& m : lower[i]) row_of[i][m] = nrows++;
  }
  linalg::Matrix system(nrows, basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const VermaVector v(basis[col], 1);
    for (int i = 0; i < rs.rank(); ++i) {
      const VermaVector image = target.act(F(i), v);
      for (const auto& [m, c] : image.terms()) system(row_of[i].at(m), col) = c;
    }
  }
  auto ker = linalg::kernel(system);
  if (ker.empty()) return std::nullopt;
  if (ker.size() > 1) {
    throw InternalError("singular vector space of dimension " + std::to_string(ker.size()) + " at weight " +
                        to_string(sought_nu));
  }
  auto& x = ker.front();
  std::size_t lead = basis.size();
  while (lead-- > 0 && x[lead] == 0) {
  }
  const Rational scale = x[lead];
  EnvElement u;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    if (x[col] != 0) u += (x[col] / scale) * alg.e_monomial(basis[col]);
  }
  return VermaHom{std::move(u), sought_nu, target.nu()};
}

VermaVector apply_hom(const VermaHom& h, const VermaVector& v, const VermaModule& target) {
  if (target.nu() != h.target_nu) throw InvalidInput("apply_hom: module does not match the hom's target");
  const Algebra& alg = target.algebra();
  VermaVector out;
  for (const auto& [n, c] : v.terms()) {
    out.add_scaled(target.collapse(alg.multiply(alg.e_monomial(n), h.u_psi)), c);
  }
  return out;
}

}  // namespace bgg
