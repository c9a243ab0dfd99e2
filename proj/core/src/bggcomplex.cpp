#include "bgg/bggcomplex.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>

#include "bgg/errors.hpp"

namespace bgg {

namespace {

// Runs body(i) for i in [0, n) on up to `jobs` threads. The first exception
// thrown by any worker is rethrown after all workers join.
template <class Body>
void parallel_for(std::size_t n, unsigned jobs, Body body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// r with a = r b, or nothing when a and b are not proportional.
std::optional<Rational> proportionality(const EnvElement& a, const EnvElement& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  const auto& [key, bval] = *b.terms().begin();
  Rational r = a.coeff(key) / bval;
  EnvElement diff = a;
  diff.add_scaled(b, -r);
  if (!diff.is_zero()) return std::nullopt;
  return r;
}

}  // namespace

BGGComplex::BGGComplex(std::shared_ptr<const Algebra> algebra, Weight lambda, std::vector<PolySpace> spaces,
                       std::vector<ComplexEdge> edges)
    : algebra_(std::move(algebra)), lambda_(std::move(lambda)), spaces_(std::move(spaces)), edges_(std::move(edges)) {
  for (std::size_t e = 0; e < edges_.size(); ++e) edge_lookup_[{edges_[e].from, edges_[e].to}] = e;
}

std::optional<std::size_t> BGGComplex::edge_index(std::size_t from, std::size_t to) const {
  auto it = edge_lookup_.find({from, to});
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<PolyElement> BGGComplex::apply_differential(int position, const std::vector<PolyElement>& x) const {
  if (position < 0 || position > top_position()) throw InvalidInput("position out of range");
  const auto& src = term(position);
  if (x.size() != src.size()) throw InvalidInput("argument length does not match the term");
  if (position == top_position()) return {};
  const auto& dst = term(position + 1);
  std::vector<PolyElement> out(dst.size());
  for (const auto& e : edges_) {
    auto si = std::find(src.begin(), src.end(), e.from);
    if (si == src.end()) continue;
    auto di = std::find(dst.begin(), dst.end(), e.to);
    PolyElement image = psi_pol(e.u_psi, x[si - src.begin()], spaces_[e.from], spaces_[e.to]);
    out[di - dst.begin()].add_scaled(image, e.scalar);
  }
  return out;
}

std::vector<std::vector<MultiIndex>> BGGComplex::block_bases(int position, const Weight& nu) const {
  std::vector<std::vector<MultiIndex>> out;
  for (std::size_t w : term(position)) out.push_back(spaces_[w].block_basis(nu));
  return out;
}

linalg::Matrix BGGComplex::differential_block(int position, const Weight& nu) const {
  if (position < 0 || position >= top_position()) throw InvalidInput("no differential at this position");
  const auto& src = term(position);
  const auto& dst = term(position + 1);
  auto src_bases = block_bases(position, nu);
  auto dst_bases = block_bases(position + 1, nu);
  auto offsets = [](const auto& bases) {
    std::vector<std::size_t> off{0};
    for (const auto& b : bases) off.push_back(off.back() + b.size());
    return off;
  };
  auto src_off = offsets(src_bases);
  auto dst_off = offsets(dst_bases);
  linalg::Matrix d(dst_off.back(), src_off.back());
  for (const auto& e : edges_) {
    auto si = std::find(src.begin(), src.end(), e.from);
    if (si == src.end()) continue;
    std::size_t s = si - src.begin();
    std::size_t t = std::find(dst.begin(), dst.end(), e.to) - dst.begin();
    if (src_bases[s].empty() || dst_bases[t].empty()) continue;
    auto block = psi_pol_block(*algebra_, e.u_psi, src_bases[s], dst_bases[t]);
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c)
        if (block(r, c) != 0) d(dst_off[t] + r, src_off[s] + c) = e.scalar * block(r, c);
  }
  return d;
}

BGGComplex assemble(std::shared_ptr<const Algebra> algebra, const Weight& lambda, unsigned jobs) {
  const RootSystem& rs = algebra->roots();
  if (static_cast<int>(lambda.coords.size()) != rs.rank()) throw InvalidInput("highest weight has the wrong rank");
  if (!rs.is_dominant(lambda)) throw InvalidInput("highest weight is not dominant: " + to_string(lambda));

  std::vector<PolySpace> spaces;
  spaces.reserve(rs.weyl().size());
  for (const auto& w : rs.weyl()) spaces.emplace_back(algebra, dot_action(rs, w, lambda));

  const auto& bruhat = rs.bruhat_edges();
  std::vector<ComplexEdge> edges(bruhat.size());
  parallel_for(bruhat.size(), jobs, [&](std::size_t i) {
    const auto& b = bruhat[i];
    auto hom = find_singular_vector(spaces[b.from].verma(), spaces[b.to].mu());
    if (!hom)
      throw InternalError("no singular vector of weight " + to_string(-spaces[b.to].mu()) + " in M(" +
                          to_string(spaces[b.from].mu()) + ")");
    edges[i] = ComplexEdge{b.from, b.to, b.root, std::move(hom->u_psi), 1};
  });
  return BGGComplex(std::move(algebra), lambda, std::move(spaces), std::move(edges));
}

BGGComplex fix_signs(BGGComplex complex, Gauge gauge) {
  const Algebra& alg = complex.algebra();
  auto& edges = complex.edges();
  for (auto& e : edges) e.scalar = 1;

  std::vector<std::vector<std::size_t>> incoming(complex.roots().weyl().size());
  std::vector<std::vector<std::size_t>> outgoing(complex.roots().weyl().size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incoming[edges[e].to].push_back(e);
    outgoing[edges[e].from].push_back(e);
  }

  for (int len = 2; len <= complex.top_position(); ++len) {
    for (std::size_t top : complex.term(len)) {
      auto in = incoming[top];
      if (gauge == Gauge::LastLowerCover) std::reverse(in.begin(), in.end());
      const std::size_t k = in.size();

      // links[a] holds (b, f): every square through in[a] and in[b] forces c_b = f c_a.
      std::vector<std::vector<std::pair<std::size_t, Rational>>> links(k);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
          std::size_t x1 = edges[in[a]].from, x2 = edges[in[b]].from;
          for (std::size_t e1 : incoming[x1]) {
            std::size_t w = edges[e1].from;
            auto e2 = complex.edge_index(w, x2);
            if (!e2) continue;
            EnvElement path_a = alg.multiply(edges[in[a]].u_psi, edges[e1].u_psi);
            EnvElement path_b = alg.multiply(edges[in[b]].u_psi, edges[*e2].u_psi);
            auto r = proportionality(path_a, path_b);
            if (!r) throw InternalError("square composites are not proportional");
            Rational f = -*r * edges[e1].scalar / edges[*e2].scalar;
            links[a].emplace_back(b, f);
            links[b].emplace_back(a, 1 / f);
          }
        }
      }

      std::vector<std::optional<Rational>> value(k);
      value[0] = Rational(1);
      std::deque<std::size_t> queue{0};
      while (!queue.empty()) {
        std::size_t a = queue.front();
        queue.pop_front();
        for (const auto& [b, f] : links[a]) {
          Rational v = f * *value[a];
          if (!value[b]) {
            value[b] = v;
            queue.push_back(b);
          } else if (*value[b] != v) {
            throw InternalError("inconsistent edge scalars at a Bruhat square");
          }
        }
      }
      for (std::size_t a = 0; a < k; ++a) {
        if (!value[a]) throw InternalError("lower covers not linked by squares");
        edges[in[a]].scalar = *value[a];
      }
    }
  }
  return complex;
}

bool WeightBlockReport::all_exact() const {
  return std::all_of(exact_at.begin(), exact_at.end(), [](bool b) { return b; });
}

bool WeightBlockReport::ok() const {
  return all_exact() && d_squared_zero && kostant_dims_match && euler_char == static_cast<long>(v_multiplicity);
}

namespace {

WeightBlockReport verify_block(const BGGComplex& complex, const Weight& nu, std::uint64_t v_multiplicity) {
  const RootSystem& rs = complex.roots();
  const int top = complex.top_position();
  WeightBlockReport rep;
  rep.nu = nu;
  auto beta = rs.to_root(complex.lambda() - nu);
  rep.height = beta ? beta->height() : -1;
  rep.v_multiplicity = v_multiplicity;

  for (int i = 0; i <= top; ++i) {
    std::size_t dim = 0, expected = 0;
    for (std::size_t w : complex.term(i)) {
      dim += complex.space(w).block_basis(nu).size();
      if (auto gap = rs.to_root(complex.space(w).mu() - nu); gap && gap->is_nonnegative())
        expected += kostant_partition(rs, *gap);
    }
    rep.dims.push_back(dim);
    if (dim != expected) rep.kostant_dims_match = false;
    rep.euler_char += (i % 2 == 0 ? 1 : -1) * static_cast<long>(dim);
  }

  std::vector<linalg::Matrix> d;
  for (int i = 0; i < top; ++i) {
    d.push_back(complex.differential_block(i, nu));
    rep.ranks.push_back(linalg::rank(d.back()));
  }
  for (int i = 0; i + 1 < top; ++i)
    if (d[i].rows() > 0 && d[i].cols() > 0 && d[i + 1].rows() > 0 &&
        !linalg::multiply(d[i + 1], d[i]).is_zero())
      rep.d_squared_zero = false;

  rep.kernel0_dim = rep.dims[0] - (top > 0 ? rep.ranks[0] : 0);
  rep.exact_at.push_back(rep.kernel0_dim == v_multiplicity);
  for (int i = 1; i <= top; ++i) {
    std::size_t in = rep.ranks[i - 1];
    std::size_t out = i < top ? rep.ranks[i] : 0;
    rep.exact_at.push_back(in + out == rep.dims[i]);
  }
  return rep;
}

}  // namespace

WeightBlockReport verify_weight_block(const BGGComplex& complex, const Weight& nu) {
  const RootSystem& rs = complex.roots();
  if (static_cast<int>(nu.coords.size()) != rs.rank()) throw InvalidInput("weight has the wrong rank");
  return verify_block(complex, nu, freudenthal_multiplicity(rs, complex.lambda(), nu));
}

ComplexReport verify_all(const BGGComplex& complex, int height_cutoff, unsigned jobs) {
  if (height_cutoff < 0) throw InvalidInput("height cutoff must be nonnegative");
  auto start = std::chrono::steady_clock::now();
  const RootSystem& rs = complex.roots();
  ComplexReport rep;
  rep.lambda = complex.lambda();
  rep.height_cutoff = height_cutoff;
  rep.weyl_dimension = weyl_dimension(rs, complex.lambda());

  auto multiplicities = weight_multiplicities(rs, complex.lambda());
  auto weights = weights_below(rs, complex.lambda(), height_cutoff);
  rep.blocks.resize(weights.size());
  parallel_for(weights.size(), jobs, [&](std::size_t i) {
    auto it = multiplicities.find(weights[i]);
    rep.blocks[i] = verify_block(complex, weights[i], it == multiplicities.end() ? 0 : it->second);
  });

  int depth = rs.to_root(complex.lambda() - rs.weyl()[rs.longest_element()].apply(complex.lambda()))->height();
  rep.covers_all_weights = height_cutoff >= depth;
  bool blocks_ok = true;
  for (const auto& b : rep.blocks) {
    rep.kernel0_total += b.kernel0_dim;
    blocks_ok = blocks_ok && b.ok();
  }
  rep.verdict = blocks_ok && rep.covers_all_weights && rep.kernel0_total == rep.weyl_dimension;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

int default_height_cutoff(const RootSystem& rs, const Weight& lambda, int cap) {
  const std::size_t theta = rs.num_positive() - 1;
  int value = 2 * rs.coroot_pairing(lambda + rs.rho(), theta);
  return std::min(value, cap);
}

std::optional<Rational> derivative_scalar(const BGGComplex& complex, const ComplexEdge& edge) {
  const Algebra& alg = complex.algebra();
  const RootSystem& rs = complex.roots();
  if (rs.positive_roots()[edge.root].height() != 1) return std::nullopt;
  const int r = alg.num_positive();
  const int a = static_cast<int>(edge.root);
  if (edge.u_psi.size() != 1) return std::nullopt;
  const auto& [key, coeff] = *edge.u_psi.terms().begin();
  MultiIndex e = alg.e_exponents(key);
  const int k = e[a];
  for (int j = 0; j < r; ++j)
    if (j != a && e[j] != 0) return std::nullopt;

  const PolySpace& src = complex.space(edge.from);
  const PolySpace& dst = complex.space(edge.to);
  auto apply = [&](const MultiIndex& m) {
    PolyElement image = psi_pol(edge.u_psi, PolyElement(m, 1), src, dst);
    image *= edge.scalar;
    return image;
  };
  auto derivative = [&](const MultiIndex& m) {
    PolyElement out;
    if (m[a] < k) return out;
    MultiIndex lowered = m;
    lowered[a] -= k;
    out.add(lowered, Rational(factorial(m[a]) / factorial(m[a] - k)));
    return out;
  };

  MultiIndex pure(r, 0);
  pure[a] = k;
  PolyElement base = apply(pure);
  Rational c = base.coeff(MultiIndex(r, 0));
  if (c == 0) return std::nullopt;
  c /= Rational(factorial(k));

  std::vector<MultiIndex> probes{pure};
  for (int extra = 1; extra <= 2; ++extra) {
    MultiIndex m = pure;
    m[a] += extra;
    probes.push_back(m);
  }
  for (int j = 0; j < r; ++j) {
    if (j == a) continue;
    for (int s : {0, 1}) {
      MultiIndex m = pure;
      m[a] += s;
      m[j] += 1;
      probes.push_back(m);
    }
  }
  for (const auto& m : probes) {
    PolyElement expect = derivative(m);
    expect *= c;
    if (!(apply(m) == expect)) return std::nullopt;
  }
  return c;
}

}  // namespace bgg
