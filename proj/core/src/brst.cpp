#include "gw/brst.hpp"

#include <algorithm>
#include <stdexcept>

#include "gw/fock.hpp"
#include "gw/ghosts.hpp"
#include "gw/vertex.hpp"

namespace gw {

BrstContext brst_context(const Scalar& lambda_s) {
  const auto ls = virasoro_s(lambda_s);
  const auto le = virasoro_e(2);
  const State c = generator(GenKind::c);
  State j = wick(ls.state + Scalar(1, 2) * le.state, c);
  j.add_scaled(derive(c, 2), Scalar(3, 4));
  return BrstContext{lambda_s, std::move(j), le.state + ls.state, ls.claimed_central_charge};
}

AnomalyDecomposition q_square_obstruction(const BrstContext& ctx) {
  AnomalyDecomposition out;
  out.obstruction = circle(ctx.current, 0, ctx.current);
  const State c = generator(GenKind::c);
  const State total = derive(wick(derive(c, 2), c));
  const State residue = wick(derive(c, 3), c);

  std::vector<Monomial> support;
  for (const State* s : {static_cast<const State*>(&out.obstruction), &total, &residue}) {
    for (const auto& [m, x] : *s) support.push_back(m);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  SparseMatrix a{static_cast<int>(support.size()), {coordinates(total, support), coordinates(residue, support)}};
  const ColumnEchelon echelon(a);
  if (echelon.rank() != 2) throw std::logic_error("anomaly basis is degenerate");
  auto t = echelon.solve(coordinates(out.obstruction, support));
  if (!t) return out;
  out.decomposes = true;
  for (const auto& [k, x] : *t) (k == 0 ? out.derivative_coeff : out.residue_coeff) = x;
  return out;
}

State q_apply(const BrstContext& ctx, const State& s) { return normal_ordered_mode_apply(ctx.current, 0, s); }

SparseVector coordinates(const State& s, const std::vector<Monomial>& basis) {
  SparseVector v;
  v.reserve(s.size());
  for (const auto& [m, x] : s) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m) {
      throw std::invalid_argument("monomial " + to_string(m) + " outside the basis");
    }
    v.emplace_back(static_cast<int>(it - basis.begin()), x);
  }
  // State iteration and basis share the Monomial order, so v is sorted.
  return v;
}

State from_coordinates(const SparseVector& v, const std::vector<Monomial>& basis) {
  State s;
  for (const auto& [i, x] : v) s.add_term(basis[static_cast<std::size_t>(i)], x);
  return s;
}

QMatrix q_matrix(const BrstContext& ctx, int bc, int bg) {
  const GradingScheme scheme = ctx.scheme();
  QMatrix q;
  q.bc = bc;
  q.bg = bg;
  q.source = enumerate_basis(0, bc, bg, scheme);
  q.target = enumerate_basis(0, bc + 1, bg, scheme);
  q.matrix.rows = static_cast<int>(q.target.size());
  q.matrix.columns.reserve(q.source.size());
  for (const auto& m : q.source) {
    q.matrix.columns.push_back(coordinates(q_apply(ctx, State(m)), q.target));
  }
  return q;
}

std::optional<std::pair<int, int>> weight_zero_bidegree(const BrstContext& ctx, const State& s) {
  if (s.is_zero()) return std::nullopt;
  const GradingScheme scheme = ctx.scheme();
  std::optional<std::pair<int, int>> found;
  for (const auto& [m, x] : s) {
    const Grade g = grade(m, scheme);
    if (sgn(g.weight) != 0) throw std::invalid_argument("state has nonzero conformal weight");
    const std::pair<int, int> bd{g.bc, g.bg};
    if (found && *found != bd) throw std::invalid_argument("state is not homogeneous in ghost numbers");
    found = bd;
  }
  return found;
}

WeilComplex::WeilComplex(BrstContext ctx) : ctx_(std::move(ctx)) {}

const WeilComplex::Entry& WeilComplex::entry(int bc, int bg) const {
  const std::pair<int, int> key{bc, bg};
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  // Built outside the lock; a concurrent duplicate is discarded below.
  QMatrix q = q_matrix(ctx_, bc, bg);
  ColumnEchelon echelon(q.matrix);
  auto fresh = std::make_unique<Entry>(Entry{std::move(q), std::move(echelon)});
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(key, std::move(fresh));
  return *it->second;
}

const QMatrix& WeilComplex::matrix(int bc, int bg) const { return entry(bc, bg).q; }

int WeilComplex::cohomology_dim(int bc, int bg) const {
  const Entry& here = entry(bc, bg);
  const Entry& below = entry(bc - 1, bg);
  return static_cast<int>(here.q.source.size()) - here.echelon.rank() - below.echelon.rank();
}

CohomologyEntry WeilComplex::cohomology(int bc, int bg) const {
  CohomologyEntry out;
  out.dim = cohomology_dim(bc, bg);
  if (out.dim != 1) return out;
  const Entry& here = entry(bc, bg);
  const Entry& below = entry(bc - 1, bg);
  for (const auto& kernel_vector : here.echelon.kernel()) {
    SparseVector reduced = below.echelon.reduce_modulo_image(kernel_vector);
    if (reduced.empty()) continue;
    State rep = from_coordinates(reduced, here.q.source);
    // Image vectors carry derivatives, so the derivative-free part is a
    // class invariant; its last monomial is normalized to 1.
    const State free_part = rep.derivative_free_part();
    const Scalar lead = free_part.is_zero() ? rep.begin()->second : std::prev(free_part.end())->second;
    rep *= 1 / lead;
    out.representative = std::move(rep);
    break;
  }
  return out;
}

CohomologyTable WeilComplex::cohomology_table(int bc_min, int bc_max, int bg_max) const {
  CohomologyTable table;
  for (int bg = 0; bg <= bg_max; ++bg) {
    for (int bc = bc_min; bc <= bc_max; ++bc) table.emplace(std::make_pair(bc, bg), cohomology(bc, bg));
  }
  return table;
}

CoboundaryResult WeilComplex::is_coboundary(const State& s) const {
  const auto bd = weight_zero_bidegree(ctx_, s);
  if (!bd) return {true, State{}};
  if (!q_apply(ctx_, s).is_zero()) throw std::invalid_argument("state is not a cocycle");
  const Entry& below = entry(bd->first - 1, bd->second);
  auto t = below.echelon.solve(coordinates(s, below.q.target));
  if (!t) return {false, std::nullopt};
  return {true, from_coordinates(*t, below.q.source)};
}

bool WeilComplex::cohomology_equal(const State& u, const State& v) const {
  const auto du = weight_zero_bidegree(ctx_, u);
  const auto dv = weight_zero_bidegree(ctx_, v);
  if (du && dv && *du != *dv) throw std::invalid_argument("classes of different bidegree");
  return is_coboundary(u - v).is_coboundary;
}

std::optional<Scalar> WeilComplex::class_ratio(const State& u, const State& rep) const {
  const auto dr = weight_zero_bidegree(ctx_, rep);
  if (!dr) throw std::invalid_argument("reference class is zero");
  const auto du = weight_zero_bidegree(ctx_, u);
  if (du && *du != *dr) return std::nullopt;
  for (const State* s : {&u, &rep}) {
    if (!q_apply(ctx_, *s).is_zero()) throw std::invalid_argument("state is not a cocycle");
  }
  const Entry& below = entry(dr->first - 1, dr->second);
  const auto& basis = below.q.target;
  const SparseVector r = below.echelon.reduce_modulo_image(coordinates(rep, basis));
  if (r.empty()) throw std::invalid_argument("reference class is a coboundary");
  const SparseVector v = below.echelon.reduce_modulo_image(coordinates(u, basis));
  if (v.empty()) return Scalar(0);
  const Scalar ratio = v.front().second / r.front().second;
  SparseVector diff = v;
  axpy(diff, -ratio, r);
  if (!diff.empty()) return std::nullopt;
  return ratio;
}

const QMatrix& WeilComplex::plain_matrix(int bc, int bg) const {
  const std::pair key{bc, bg};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second->q;
    if (auto it = matrices_.find(key); it != matrices_.end()) return *it->second;
  }
  auto fresh = std::make_unique<QMatrix>(q_matrix(ctx_, bc, bg));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = matrices_.try_emplace(key, std::move(fresh));
  return *it->second;
}

int WeilComplex::modular_q_rank(int bc, int bg) const {
  const std::pair key{bc, bg};
  {
    std::lock_guard lock(mutex_);
    if (auto it = modular_ranks_.find(key); it != modular_ranks_.end()) return it->second;
  }
  const int rank = modular_rank(plain_matrix(bc, bg).matrix);
  std::lock_guard lock(mutex_);
  modular_ranks_.emplace(key, rank);
  return rank;
}

const WeilComplex::ProjectionCertificate& WeilComplex::projection_certificate(int bc, int bg) const {
  const std::pair key{bc, bg};
  {
    std::lock_guard lock(mutex_);
    if (auto it = certificates_.find(key); it != certificates_.end()) return *it->second;
  }
  const QMatrix& below = plain_matrix(bc - 1, bg);
  for (const auto& column : below.matrix.columns) {
    for (const auto& [row, x] : column) {
      if (!below.target[static_cast<std::size_t>(row)].has_derivative()) {
        throw std::logic_error("image of Q leaves the derivative subspace");
      }
    }
  }
  auto cert = std::make_unique<ProjectionCertificate>();
  const int n = static_cast<int>(plain_matrix(bc, bg).source.size());
  cert->dim_bound = n - modular_q_rank(bc, bg) - modular_q_rank(bc - 1, bg);
  if (cert->dim_bound > 1) throw std::logic_error("cohomology bound exceeds one");
  if (cert->dim_bound == 1) {
    if (bc != 0 && bc != 1) throw std::logic_error("no reference class in this bidegree");
    State ref = bc == 0 ? power_rep(bg) : odd_power_rep(bg);
    if (!q_apply(ctx_, ref).is_zero()) throw std::logic_error("reference is not a cocycle");
    cert->reference_free_part = ref.derivative_free_part();
    if (cert->reference_free_part.is_zero()) throw std::logic_error("reference has no derivative-free part");
    cert->reference = std::move(ref);
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = certificates_.try_emplace(key, std::move(cert));
  return *it->second;
}

std::optional<Scalar> WeilComplex::projected_class_ratio(const State& free_part, int bc, int bg) const {
  const ProjectionCertificate& cert = projection_certificate(bc, bg);
  if (free_part.is_zero()) return Scalar(0);
  if (cert.dim_bound == 0) return std::nullopt;
  const auto& [m, x] = *cert.reference_free_part.begin();
  const Scalar ratio = free_part.coefficient(m) / x;
  if (free_part != ratio * cert.reference_free_part) return std::nullopt;
  return ratio;
}

WeilComplex::RankCheck WeilComplex::rank_check(int bc, int bg) const {
  const Entry& e = entry(bc, bg);
  return {e.echelon.rank(), bareiss_rank(e.q.matrix), modular_rank(e.q.matrix)};
}

bool in_derivative_subspace(const State& s) {
  return std::all_of(s.begin(), s.end(), [](const auto& term) { return term.first.has_derivative(); });
}

State class_x() {
  const State beta = generator(GenKind::beta);
  const State gamma = generator(GenKind::gamma);
  const State b = generator(GenKind::b);
  const State c = generator(GenKind::c);
  State x = iterated_wick({beta, gamma, gamma});
  x -= iterated_wick({b, c, gamma});
  x.add_scaled(derive(gamma), Scalar(3, 2));
  return x;
}

State class_y() {
  const State c = generator(GenKind::c);
  State y = iterated_wick({c, generator(GenKind::beta), generator(GenKind::gamma)});
  y.add_scaled(derive(c), Scalar(3, 2));
  return y;
}

State power_rep(int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  State acc = State::vacuum();
  const State x = class_x();
  for (int i = 0; i < k; ++i) acc = wick(x, acc);
  return acc;
}

State odd_power_rep(int k) { return wick(class_y(), power_rep(k)); }

std::optional<int> bc_degree(const State& s) {
  std::optional<int> degree;
  for (const auto& [m, x] : s) {
    int d = 0;
    for (const auto& mode : m.modes()) d += bc_ghost(mode.kind);
    if (degree && *degree != d) throw std::invalid_argument("state is not homogeneous in bc ghost number");
    degree = d;
  }
  return degree;
}

State lz_bracket_free_part(const State& u, const State& v) {
  const auto degree = bc_degree(u);
  if (!degree) return {};
  State out = derivative_free_mode_apply(circle(generator(GenKind::b), 0, u), 0, v);
  if (*degree % 2 != 0) out *= Scalar(-1);
  return out;
}

State wick_free_part(const State& u, const State& v) { return derivative_free_mode_apply(u, -1, v); }

State lz_bracket(const State& u, const State& v) {
  const auto degree = bc_degree(u);
  if (!degree) return {};
  State out = circle(circle(generator(GenKind::b), 0, u), 0, v);
  if (*degree % 2 != 0) out *= Scalar(-1);
  return out;
}

}  // namespace gw
