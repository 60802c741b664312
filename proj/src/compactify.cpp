#include "geneo/compactify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "geneo/error.hpp"
#include "geneo/kernels.hpp"

namespace geneo {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::vector<double> gather(std::span<const double> v, std::span<const PointIndex> f) {
  std::vector<double> out(f.size());
  for (std::size_t p = 0; p < f.size(); ++p) out[p] = v[f[p]];
  return out;
}

bool is_permutation(std::span<const PointIndex> f) {
  std::vector<char> seen(f.size(), 0);
  for (PointIndex v : f) {
    if (v >= f.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

double sup(std::span<const double> a, std::span<const double> b) { return kernels::sup_abs_diff(a, b); }

}  // namespace

PresentedPair exact_presented(std::shared_ptr<const PerceptionPair> pair) {
  PresentedPair p;
  p.presentation = finite_presentation(pair->domain());
  p.act = [pair](std::size_t g, const Descriptor& d) {
    const auto x = static_cast<std::size_t>(d.at(0).num());
    return Descriptor{Rational(static_cast<std::int64_t>(pair->group().at(g).forward.at(x)))};
  };
  p.exact = true;
  p.pair = std::move(pair);
  return p;
}

NetLocator::NetLocator(const CompletionApprox& net, std::function<double(const Descriptor&, const Descriptor&)> dist,
                       std::size_t pivots)
    : points_(net.points), dist_(std::move(dist)) {
  const std::size_t m = net.points.size();
  const DistanceMatrix& d = net.space;
  FarthestPointOrder order = farthest_point_order(
      m, [&d](std::size_t i, std::span<double> out) { std::copy(d.row(i).begin(), d.row(i).end(), out.begin()); });
  const std::size_t k = std::min(pivots, order.order.size());
  pivots_.assign(order.order.begin(), order.order.begin() + static_cast<std::ptrdiff_t>(k));
  pivot_rows_.resize(k * m);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = 0; c < m; ++c) pivot_rows_[a * m + c] = d(pivots_[a], c);
  }
}

Cover NetLocator::nearest(const Descriptor& q) const {
  const std::size_t m = points_.size();
  if (m == 0) fail(ErrorKind::Parameter, "empty net");
  const std::size_t k = pivots_.size();
  std::vector<double> dp(k);
  Cover best{kNone, std::numeric_limits<double>::infinity()};
  for (std::size_t a = 0; a < k; ++a) {
    dp[a] = dist_(q, points_[pivots_[a]]);
    if (dp[a] < best.distance || (dp[a] == best.distance && pivots_[a] < best.center)) best = {pivots_[a], dp[a]};
  }
  for (std::size_t c = 0; c < m; ++c) {
    double lb = 0.0;
    for (std::size_t a = 0; a < k; ++a) lb = std::max(lb, std::abs(dp[a] - pivot_rows_[a * m + c]));
    if (lb > best.distance + 1e-12) continue;
    const double v = dist_(q, points_[c]);
    if (v < best.distance || (v == best.distance && c < best.center)) best = {c, v};
  }
  return best;
}

CompletionPair make_completion_pair(const PresentedPair& p, double eps, const CompletionOptions& opts) {
  const PerceptionPair& pair = *p.pair;
  const std::size_t n = pair.points();
  if (p.presentation.sample_size != n) fail(ErrorKind::Parameter, "presentation sample size differs from the pair");
  CompletionPair c;
  c.presentation = p.presentation;
  c.xhat = completion_net(p.presentation, eps, opts);
  c.j = c.xhat.sample_embedding;
  const DistanceMatrix& d = c.xhat.space;
  const std::size_t m = d.size();

  c.nearest_sample.assign(m, 0);
  c.sample_gap.assign(m, std::numeric_limits<double>::infinity());
  for (std::size_t q = 0; q < m; ++q) {
    for (std::size_t x = 0; x < n; ++x) {
      const double v = d(q, c.j[x]);
      if (v < c.sample_gap[q]) {
        c.sample_gap[q] = v;
        c.nearest_sample[q] = x;
      }
    }
    c.density_gap = std::max(c.density_gap, c.sample_gap[q]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      c.embedding_residual = std::max(c.embedding_residual, std::abs(d(c.j[x], c.j[y]) - pair.domain()(x, y)));
    }
  }

  c.by_distance.resize(m);
  for (std::size_t q = 0; q < m; ++q) {
    auto& order = c.by_distance[q];
    order.resize(m);
    std::iota(order.begin(), order.end(), PointIndex{0});
    std::stable_sort(order.begin(), order.end(), [&](PointIndex a, PointIndex b) { return d(q, a) < d(q, b); });
  }
  c.locator = std::make_shared<const NetLocator>(c.xhat, p.presentation.dist);
  return c;
}

ExtendedSignal extend_signal(const Signal& phi, std::size_t origin, const CompletionPair& comp, bool force) {
  if (!comp.xhat.saturated && !force) {
    fail(ErrorKind::Unsaturated, "completion net did not saturate within its budget");
  }
  ExtendedSignal e;
  e.eps = comp.xhat.eps;
  e.origin = origin;
  e.values.resize(comp.size());
  for (std::size_t q = 0; q < comp.size(); ++q) e.values[q] = phi.values.at(comp.nearest_sample[q]);
  return e;
}

std::vector<ExtendedSignal> extend_signals(const SignalSpace& phi, const CompletionPair& comp, bool force) {
  std::vector<ExtendedSignal> out;
  out.reserve(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out.push_back(extend_signal(phi[i], i, comp, force));
  return out;
}

InducedOperation induce_action(PointAction act, const CompletionPair& comp, double delta) {
  InducedOperation op;
  const std::size_t m = comp.size();
  op.forward.resize(m);
  for (std::size_t q = 0; q < m; ++q) {
    const Cover c = comp.locator->nearest(act(comp.xhat.points[q]));
    if (c.distance > delta + kDefaultTolerance) {
      fail(ErrorKind::Resolution, "image of net point " + std::to_string(q) + " lies " + std::to_string(c.distance) +
                                      " from the net, above " + std::to_string(delta));
    }
    op.forward[q] = static_cast<PointIndex>(c.center);
    op.snap = std::max(op.snap, c.distance);
  }
  op.drift = op.snap;
  op.bijective = is_permutation(op.forward);
  op.act = std::move(act);
  return op;
}

InducedOperation induce_operation(const PresentedPair& p, std::size_t g, const CompletionPair& comp, double delta) {
  if (g >= p.pair->group().size()) fail(ErrorKind::Parameter, "group index out of range");
  auto act = p.act;
  return induce_action([act, g](const Descriptor& d) { return act(g, d); }, comp, delta);
}

InducedOperation identity_operation(const CompletionPair& comp) {
  InducedOperation op;
  op.forward.resize(comp.size());
  std::iota(op.forward.begin(), op.forward.end(), PointIndex{0});
  op.bijective = true;
  op.act = [](const Descriptor& d) { return d; };
  return op;
}

InducedOperation compose(const InducedOperation& a, const InducedOperation& b) {
  if (a.forward.size() != b.forward.size()) fail(ErrorKind::Shape, "net maps over different nets");
  InducedOperation op;
  op.forward.resize(b.forward.size());
  for (std::size_t q = 0; q < b.forward.size(); ++q) op.forward[q] = a.forward[b.forward[q]];
  op.snap = std::max(a.snap, b.snap);
  op.drift = a.drift + b.drift;
  op.bijective = a.bijective && b.bijective;
  if (a.act && b.act) {
    auto fa = std::make_shared<const PointAction>(a.act);
    auto fb = std::make_shared<const PointAction>(b.act);
    op.act = [fa, fb](const Descriptor& d) { return (*fa)((*fb)(d)); };
  }
  return op;
}

double net_uniform_distance(const CompletionPair& comp, const InducedOperation& f, const InducedOperation& g,
                            double stop) {
  const DistanceMatrix& d = comp.metric();
  double best = 0.0;
  for (std::size_t q = 0; q < f.forward.size(); ++q) {
    best = std::max(best, d(f.forward[q], g.forward[q]));
    if (best > stop) return best;
  }
  return best;
}

double exact_uniform_distance(const CompletionPair& comp, const PointAction& f, const PointAction& g) {
  double best = 0.0;
  for (const Descriptor& x : comp.xhat.points) best = std::max(best, comp.presentation.dist(f(x), g(x)));
  return best;
}

NearestSignal ClosedSignalSpace::nearest(std::span<const double> values) const {
  NearestSignal best;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const double v = sup(values, members[k].values);
    if (v < best.distance) best = {k, v};
  }
  return best;
}

ClosedSignalSpace closure_signals(std::span<const ExtendedSignal> signals, double eps) {
  if (signals.empty()) fail(ErrorKind::Parameter, "no signals to close");
  ClosedSignalSpace out;
  out.eps = eps;
  out.net = greedy_eps_net(
      signals.size(),
      [signals](std::size_t i, std::span<double> row) {
        for (std::size_t k = 0; k < signals.size(); ++k) row[k] = sup(signals[i].values, signals[k].values);
      },
      eps);
  for (std::size_t c : out.net.centers) {
    out.members.push_back(signals[c]);
    out.source_index.push_back(c);
  }
  return out;
}

double closure_distance(const CompletionPair& comp, const InducedOperation& f, const InducedOperation& g) {
  const double net = net_uniform_distance(comp, f, g);
  if (!f.act || !g.act || (f.drift == 0.0 && g.drift == 0.0)) return net;
  return std::min(net, exact_uniform_distance(comp, f.act, g.act));
}

void GroupLocator::add(const InducedOperation& op, std::size_t index) {
  buckets_.at(op.forward.at(0)).push_back(index);
  max_drift_ = std::max(max_drift_, op.drift);
}

Cover GroupLocator::nearest_closure(const InducedOperation& f, const std::vector<InducedOperation>& elements,
                                    double eps) const {
  Cover best = nearest(f, elements);
  if (best.distance <= eps || !f.act || (f.drift == 0.0 && max_drift_ == 0.0)) return best;
  for (std::size_t e : within(f, elements, eps + f.drift + max_drift_)) {
    if (!elements[e].act) continue;
    const double v = exact_uniform_distance(*comp_, f.act, elements[e].act);
    if (v < best.distance) best = {e, v};
    if (best.distance <= eps) break;
  }
  return best;
}

Cover GroupLocator::nearest(const InducedOperation& f, const std::vector<InducedOperation>& elements) const {
  const DistanceMatrix& d = comp_->metric();
  const PointIndex probe = f.forward.at(0);
  Cover best{kNone, std::numeric_limits<double>::infinity()};
  for (PointIndex c : comp_->by_distance[probe]) {
    if (d(probe, c) > best.distance) break;
    for (std::size_t e : buckets_[c]) {
      const double v = net_uniform_distance(*comp_, f, elements[e], best.distance);
      if (v < best.distance || (v == best.distance && e < best.center)) best = {e, v};
    }
  }
  return best;
}

std::vector<std::size_t> GroupLocator::within(const InducedOperation& f, const std::vector<InducedOperation>& elements,
                                              double r) const {
  const DistanceMatrix& d = comp_->metric();
  const PointIndex probe = f.forward.at(0);
  std::vector<std::size_t> out;
  for (PointIndex c : comp_->by_distance[probe]) {
    if (d(probe, c) > r) break;
    for (std::size_t e : buckets_[c]) {
      if (net_uniform_distance(*comp_, f, elements[e], r) <= r) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClosedGroup closure_group(std::span<const InducedOperation> gens, const CompletionPair& comp, double eps,
                          std::size_t cap) {
  ClosedGroup out;
  out.eps = eps;
  out.generator_count = gens.size();
  out.elements.push_back(identity_operation(comp));
  out.parent.push_back(kNone);
  out.via.push_back(kNone);
  GroupLocator loc(comp);
  loc.add(out.elements[0], 0);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      InducedOperation c = compose(gens[s], out.elements[head]);
      if (loc.nearest_closure(c, out.elements, eps).distance <= eps) continue;
      if (out.elements.size() >= cap) return out;
      out.elements.push_back(std::move(c));
      out.parent.push_back(head);
      out.via.push_back(s);
      loc.add(out.elements.back(), out.elements.size() - 1);
    }
  }
  out.saturated = true;
  return out;
}

InducedGeneo induce_geneo(const Geneo& f, std::span<const ExtendedSignal> phihat,
                          std::span<const ExtendedSignal> psihat) {
  if (f.table.size() != phihat.size()) fail(ErrorKind::MalformedOperator, "operator table does not cover Φ̂");
  for (std::size_t v : f.table) {
    if (v >= psihat.size()) fail(ErrorKind::MalformedOperator, "operator table leaves Ψ̂");
  }
  return {f.table};
}

ExtendedGeneo extend_geneo(const InducedGeneo& fhat, std::span<const ExtendedSignal> psihat,
                           const ClosedSignalSpace& closed_src, const ClosedSignalSpace& closed_dst) {
  ExtendedGeneo out;
  out.on_phihat.resize(fhat.table.size());
  for (std::size_t i = 0; i < fhat.table.size(); ++i) {
    const NearestSignal nn = closed_dst.nearest(psihat[fhat.table[i]].values);
    if (nn.distance > closed_dst.eps + kDefaultTolerance) {
      fail(ErrorKind::Resolution, "F̂ image farther than eps from the closed target net");
    }
    out.on_phihat[i] = nn.index;
    out.snap = std::max(out.snap, nn.distance);
  }
  for (std::size_t k : closed_src.source_index) out.on_net.push_back(out.on_phihat.at(k));
  return out;
}

std::size_t apply_extended(const ExtendedGeneo& fbar, std::span<const double> values,
                           std::span<const ExtendedSignal> phihat) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < phihat.size(); ++i) {
    const double v = sup(values, phihat[i].values);
    if (v < best_d) {
      best_d = v;
      best = i;
    }
  }
  return fbar.on_phihat.at(best);
}

namespace {

std::size_t nearest_induced(const CompletionPair& comp, const InducedOperation& f,
                            std::span<const InducedOperation> induced) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < induced.size(); ++k) {
    const double v = net_uniform_distance(comp, f, induced[k], best_d);
    if (v < best_d) {
      best_d = v;
      best = k;
    }
  }
  return best;
}

GroupLocator index_group(const CompletionPair& comp, const ClosedGroup& g) {
  GroupLocator loc(comp);
  for (std::size_t e = 0; e < g.elements.size(); ++e) loc.add(g.elements[e], e);
  return loc;
}

}  // namespace

ExtendedHom extend_homomorphism(std::span<const InducedOperation> src_induced, const ClosedGroup& src_closed,
                                std::span<const InducedOperation> dst_induced, const ClosedGroup& dst_closed,
                                const CompletionPair& src_comp, const CompletionPair& dst_comp,
                                const GeneoSpace& space) {
  const SurjectivityResult surj = collectionwise_surjective(space);
  if (!surj.covered) {
    std::string which;
    for (std::size_t k : surj.uncovered) which += (which.empty() ? "" : ",") + std::to_string(k);
    fail(ErrorKind::Precondition, "space is not collectionwise surjective; uncovered Ψ members: " + which);
  }
  const auto& table = space.hom().table;
  if (src_induced.size() != table.size()) fail(ErrorKind::Shape, "induced source group differs from T's domain");
  GroupLocator loc = index_group(dst_comp, dst_closed);
  ExtendedHom out;
  for (const InducedOperation& e : src_closed.elements) {
    const std::size_t k = nearest_induced(src_comp, e, src_induced);
    out.via_induced.push_back(k);
    out.table.push_back(loc.nearest(dst_induced[table[k]], dst_closed.elements).center);
  }
  return out;
}

bool CompactificationReport::all_pass() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.pass; });
}

const Condition* CompactificationReport::find(const std::string& name) const {
  for (const Condition& c : conditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

SideArtifacts build_side(const PresentedPair& p, double eps, const CompactifyOptions& opts) {
  const SeparationResult sep = separation_check(*p.pair);
  if (!sep.separated) {
    fail(ErrorKind::Precondition, "Φ does not separate points " + std::to_string(sep.witness->first) + " and " +
                                      std::to_string(sep.witness->second));
  }
  SideArtifacts s;
  s.comp = make_completion_pair(p, eps, opts.completion);
  s.extended = extend_signals(p.pair->phi(), s.comp, opts.force_unsaturated);
  const double delta = opts.snap_delta > 0.0 ? opts.snap_delta : eps;
  for (std::size_t g = 0; g < p.pair->group().size(); ++g) s.induced.push_back(induce_operation(p, g, s.comp, delta));
  s.closed_signals = closure_signals(s.extended, eps);
  std::vector<InducedOperation> gens;
  for (std::size_t g : p.pair->generators()) gens.push_back(s.induced[g]);
  s.closed_group = closure_group(gens, s.comp, eps, opts.group_cap);
  return s;
}

DistanceMatrix signal_matrix(std::span<const ExtendedSignal> s) {
  DistanceMatrix d(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const double v = sup(s[a].values, s[b].values);
      d.at(a, b) = v;
      d.at(b, a) = v;
    }
  }
  return d;
}

DistanceMatrix group_matrix(const CompletionPair& comp, const std::vector<InducedOperation>& g) {
  DistanceMatrix d(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      const double v = net_uniform_distance(comp, g[a], g[b]);
      d.at(a, b) = v;
      d.at(b, a) = v;
    }
  }
  return d;
}

DistanceMatrix net_metric_from(std::span<const ExtendedSignal> s, std::size_t m) {
  DistanceMatrix d(m);
  for (const ExtendedSignal& e : s) {
    for (std::size_t p = 0; p < m; ++p) {
      kernels::max_abs_diff_accumulate(d.row(p), e.values, e.values[p]);
    }
  }
  return d;
}

double matrix_gap(const DistanceMatrix& a, const DistanceMatrix& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, sup(a.row(i), b.row(i)));
  return r;
}

std::size_t profile_decreases(const std::vector<std::size_t>& p) {
  std::size_t bad = 0;
  for (std::size_t k = 1; k < p.size(); ++k) bad += p[k] < p[k - 1];
  return bad;
}

class Reporter {
 public:
  Reporter(CompactificationReport& r, double eps, double tau, bool exact) : r_(r), eps_(eps), tau_(tau), exact_(exact) {}
  /// Bound k·eps on presented inputs, τ on exact ones.
  void scaled(std::string name, double residual, double k) { add(std::move(name), residual, exact_ ? tau_ : k * eps_ + tau_); }
  /// Conditions read through the eps-closures keep k·eps even on exact inputs.
  void closed(std::string name, double residual, double k) { add(std::move(name), residual, k * eps_ + tau_); }
  void add(std::string name, double residual, double bound) {
    r_.conditions.push_back({std::move(name), residual, bound, residual <= bound});
  }
  double tau() const { return tau_; }
  double eps() const { return eps_; }

 private:
  CompactificationReport& r_;
  double eps_, tau_;
  bool exact_;
};

void side_conditions(Reporter& rep, const SideArtifacts& s, const PerceptionPair& pair, const std::string& tag) {
  const CompletionPair& comp = s.comp;
  const std::size_t m = comp.size();
  const std::size_t n = pair.points();
  const std::size_t ng = pair.group().size();

  rep.add("j.isometry" + tag, comp.embedding_residual, rep.tau());
  rep.scaled("sample.density" + tag, comp.density_gap, 1.0);

  const DistanceMatrix dphihat = net_metric_from(s.extended, m);
  rep.scaled("PsMetEq" + tag, matrix_gap(dphihat, comp.metric()), 2.0);
  const DistanceMatrix dbar = net_metric_from(s.closed_signals.members, m);
  rep.closed("DTild" + tag, matrix_gap(dbar, dphihat), 2.0);

  double iso = 0.0;
  for (std::size_t a = 0; a < s.extended.size(); ++a) {
    for (std::size_t b = 0; b < s.extended.size(); ++b) {
      iso = std::max(iso, std::abs(sup(s.extended[a].values, s.extended[b].values) -
                                   signal_distance(pair.phi()[a], pair.phi()[b])));
    }
  }
  rep.scaled("ExtSgIso" + tag, iso, 2.0);

  double comsg = 0.0;
  for (std::size_t a = 0; a < s.extended.size(); ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      comsg = std::max(comsg, std::abs(s.extended[a].values[comp.j[x]] - pair.phi()[a].values[x]));
    }
  }
  rep.scaled("ComSg" + tag, comsg, 2.0);

  double kiso = 0.0, combj = 0.0, cmt = 0.0, fncomp = 0.0, inv = 0.0;
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t h = 0; h < ng; ++h) {
      kiso = std::max(kiso, std::abs(net_uniform_distance(comp, s.induced[g], s.induced[h]) -
                                     aut_distance(pair, g, h)));
      const InducedOperation gh = compose(s.induced[g], s.induced[h]);
      fncomp = std::max(fncomp, net_uniform_distance(comp, gh, s.induced[pair.compose_index(g, h)]));
    }
    for (std::size_t x = 0; x < n; ++x) {
      combj = std::max(combj, comp.metric()(s.induced[g].forward[comp.j[x]], comp.j[pair.group()[g].forward[x]]));
    }
    for (std::size_t a = 0; a < s.extended.size(); ++a) {
      const std::vector<double> comp_values = gather(s.extended[a].values, s.induced[g].forward);
      cmt = std::max(cmt, sup(comp_values, s.extended[pair.act(g, a)].values));
    }
    const InducedOperation back = compose(s.induced[g], s.induced[pair.inverse_index(g)]);
    inv = std::max(inv, net_uniform_distance(comp, back, s.closed_group.elements[0]));
  }
  rep.scaled("kiso" + tag, kiso, 2.0);
  rep.scaled("ComBj" + tag, combj, 2.0);
  rep.scaled("IndBjCmt" + tag, cmt, 2.0);
  rep.scaled("IndBjFnCompCmt" + tag, fncomp, 2.0);
  rep.scaled("IndBjInv" + tag, inv, 2.0);

  double cover = 0.0;
  for (const Cover& c : s.closed_signals.net.coverage) cover = std::max(cover, c.distance);
  rep.add("ClCpPhComp" + tag, cover, rep.eps() + rep.tau());

  const ClosedGroup& cg = s.closed_group;
  const GroupLocator loc = index_group(comp, cg);
  double prod = 0.0, inverses = 0.0, contains = 0.0;
  for (std::size_t a = 0; a < cg.elements.size(); ++a) {
    double best_inv = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < cg.elements.size(); ++b) {
      const InducedOperation ab = compose(cg.elements[a], cg.elements[b]);
      prod = std::max(prod, loc.nearest_closure(ab, cg.elements, rep.eps()).distance);
      best_inv = std::min(best_inv, net_uniform_distance(comp, ab, cg.elements[0], best_inv));
    }
    inverses = std::max(inverses, best_inv);
  }
  for (const InducedOperation& g : s.induced) {
    contains = std::max(contains, loc.nearest_closure(g, cg.elements, rep.eps()).distance);
  }
  rep.add("ClCpsbstClCp.products" + tag, prod, rep.eps() + rep.tau());
  rep.add("ClCpsbstClCp.inverses" + tag, inverses, rep.eps() + rep.tau());
  rep.add("ClCpsbstClCp.contains" + tag, contains, rep.eps() + rep.tau());

  double chi = 0.0;
  const SignalSpace& phi = pair.phi();
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t h = g + 1; h < ng; ++h) {
      const double hd = hausdorff_distance(phi.size(), phi.size(), [&](std::size_t a, std::size_t b) {
        return signal_distance(phi[pair.act(g, a)], phi[pair.act(h, b)]);
      });
      chi = std::max(chi, hd - aut_distance(pair, g, h));
    }
  }
  rep.add("AutComp.chi" + tag, chi, rep.tau());
}

}  // namespace

Compactification compactify(const PresentedPair& src, const PresentedPair& dst, const GeneoSpace& space, double eps,
                            const CompactifyOptions& opts) {
  if (!(eps > 0.0) || !std::isfinite(eps)) fail(ErrorKind::Parameter, "eps must be positive and finite");
  if (src.pair.get() != &space.source() || dst.pair.get() != &space.target()) {
    fail(ErrorKind::Parameter, "presented pairs are not the pairs of the GENEO space");
  }
  if (space.operators().empty()) fail(ErrorKind::Parameter, "GENEO space has no operators");

  Compactification out;
  out.source = build_side(src, eps, opts);
  out.target = build_side(dst, eps, opts);
  SideArtifacts& S = out.source;
  SideArtifacts& Y = out.target;
  const PerceptionPair& sp = space.source();
  const PerceptionPair& tp = space.target();
  const auto& T = space.hom().table;
  const auto& ops = space.operators();

  for (const Geneo& f : ops) {
    out.induced_operators.push_back(induce_geneo(f, S.extended, Y.extended));
    out.operators.push_back(extend_geneo(out.induced_operators.back(), Y.extended, S.closed_signals, Y.closed_signals));
  }
  out.hom = extend_homomorphism(S.induced, S.closed_group, Y.induced, Y.closed_group, S.comp, Y.comp, space);

  CompactificationReport& r = out.report;
  r.eps = eps;
  const double tau = std::max(sp.tolerance(), tp.tolerance());
  Reporter rep(r, eps, tau, src.exact && dst.exact);
  side_conditions(rep, S, sp, "[X]");
  side_conditions(rep, Y, tp, "[Y]");

  const auto psi_of = [&](std::size_t op, std::size_t i) -> const std::vector<double>& {
    return Y.extended[out.induced_operators[op].table[i]].values;
  };
  const auto bar_of = [&](std::size_t op, std::size_t i) -> const std::vector<double>& {
    return Y.closed_signals.members[out.operators[op].on_phihat[i]].values;
  };
  const std::size_t nphi = S.extended.size();
  const std::size_t nops = ops.size();

  double equiv = 0.0, nexp = 0.0;
  for (std::size_t op = 0; op < nops; ++op) {
    for (std::size_t i = 0; i < nphi; ++i) {
      for (std::size_t g = 0; g < sp.group().size(); ++g) {
        const std::vector<double> moved = gather(S.extended[i].values, S.induced[g].forward);
        std::size_t nearest = 0;
        double nd = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < nphi; ++k) {
          const double v = sup(moved, S.extended[k].values);
          if (v < nd) nd = v, nearest = k;
        }
        const std::vector<double> rhs = gather(psi_of(op, i), Y.induced[T[g]].forward);
        equiv = std::max(equiv, sup(psi_of(op, nearest), rhs));
      }
      for (std::size_t k = 0; k < nphi; ++k) {
        nexp = std::max(nexp, sup(psi_of(op, i), psi_of(op, k)) - sup(S.extended[i].values, S.extended[k].values));
      }
    }
  }
  rep.scaled("CpFGO.equivariance", equiv, 2.0);
  rep.scaled("CpFGO.nonexpansive", nexp, 2.0);

  double tnexp = 0.0;
  for (std::size_t a = 0; a < sp.group().size(); ++a) {
    for (std::size_t b = 0; b < sp.group().size(); ++b) {
      tnexp = std::max(tnexp, net_uniform_distance(Y.comp, Y.induced[T[a]], Y.induced[T[b]]) -
                                  net_uniform_distance(S.comp, S.induced[a], S.induced[b]));
    }
  }
  rep.scaled("CpTNExp", tnexp, 2.0);

  double f1 = 0.0, f2 = 0.0, f3 = 0.0;
  DistanceMatrix d3(nops);
  for (std::size_t a = 0; a < nops; ++a) {
    for (std::size_t b = 0; b < nops; ++b) {
      double d1 = 0.0, d2 = 0.0;
      for (std::size_t i = 0; i < nphi; ++i) {
        d1 = std::max(d1, sup(psi_of(a, i), psi_of(b, i)));
        d2 = std::max(d2, sup(bar_of(a, i), bar_of(b, i)));
      }
      const double dg = geneo_distance(ops[a], ops[b], tp);
      d3.at(a, b) = d2;
      f1 = std::max(f1, std::abs(d1 - dg));
      f2 = std::max(f2, std::abs(d2 - d1));
      f3 = std::max(f3, std::abs(d2 - dg));
    }
  }
  rep.scaled("f1Iso", f1, 2.0);
  rep.closed("f2Iso", f2, 2.0);
  rep.closed("ComGN4", f3, 2.0);

  double gn1 = 0.0, gn2 = 0.0;
  for (std::size_t op = 0; op < nops; ++op) {
    for (std::size_t i = 0; i < nphi; ++i) {
      const Signal& psi = tp.phi()[ops[op].table[i]];
      for (std::size_t y = 0; y < tp.points(); ++y) {
        gn1 = std::max(gn1, std::abs(psi_of(op, i)[Y.comp.j[y]] - psi.values[y]));
      }
      gn2 = std::max(gn2, sup(bar_of(op, i), psi_of(op, i)));
    }
  }
  rep.scaled("ComGN1", gn1, 2.0);
  rep.add("ClCpFNExp.restriction", gn2, eps + tau);
  rep.add("ComGN2", gn2, eps + tau);
  rep.add("ComGNF", gn2, eps + tau);

  double bar_nexp = 0.0;
  for (std::size_t op = 0; op < nops; ++op) {
    for (std::size_t i = 0; i < nphi; ++i) {
      for (std::size_t k = 0; k < nphi; ++k) {
        bar_nexp =
            std::max(bar_nexp, sup(bar_of(op, i), bar_of(op, k)) - sup(S.extended[i].values, S.extended[k].values));
      }
    }
  }
  rep.closed("ClCpFNExp.nonexpansive", bar_nexp, 4.0);

  const ClosedGroup& SG = S.closed_group;
  const ClosedGroup& YG = Y.closed_group;
  const auto bar_at = [&](std::size_t op, std::span<const double> values) -> const std::vector<double>& {
    return Y.closed_signals.members[apply_extended(out.operators[op], values, S.extended)].values;
  };
  double bar_equiv_g = 0.0, bar_equiv = 0.0;
  for (std::size_t op = 0; op < nops; ++op) {
    for (std::size_t k = 0; k < S.closed_signals.members.size(); ++k) {
      const std::vector<double>& phi = S.closed_signals.members[k].values;
      const std::vector<double>& fphi = bar_of(op, S.closed_signals.source_index[k]);
      for (std::size_t g = 0; g < sp.group().size(); ++g) {
        const std::vector<double> lhs = bar_at(op, gather(phi, S.induced[g].forward));
        bar_equiv_g = std::max(bar_equiv_g, sup(lhs, gather(fphi, Y.induced[T[g]].forward)));
      }
      for (std::size_t e = 0; e < SG.elements.size(); ++e) {
        const std::vector<double> lhs = bar_at(op, gather(phi, SG.elements[e].forward));
        bar_equiv = std::max(bar_equiv, sup(lhs, gather(fphi, YG.elements[out.hom.table[e]].forward)));
      }
    }
  }
  rep.closed("ClCpFNExp.equivariance", bar_equiv_g, 4.0);
  rep.closed("thmextequiv", bar_equiv, 4.0);

  const GroupLocator sloc = index_group(S.comp, SG);
  double gnt = 0.0;
  for (std::size_t g = 0; g < sp.group().size(); ++g) {
    const std::size_t e = sloc.nearest(S.induced[g], SG.elements).center;
    gnt = std::max(gnt, net_uniform_distance(Y.comp, YG.elements[out.hom.table[e]], Y.induced[T[g]]));
  }
  rep.closed("ComGNT", gnt, 2.0);

  double hom = 0.0, cl_tnexp = 0.0;
  for (std::size_t a = 0; a < SG.elements.size(); ++a) {
    for (std::size_t b = 0; b < SG.elements.size(); ++b) {
      const std::size_t ab = sloc.nearest(compose(SG.elements[a], SG.elements[b]), SG.elements).center;
      const InducedOperation tt = compose(YG.elements[out.hom.table[a]], YG.elements[out.hom.table[b]]);
      hom = std::max(hom, net_uniform_distance(Y.comp, YG.elements[out.hom.table[ab]], tt));
      cl_tnexp = std::max(cl_tnexp, net_uniform_distance(Y.comp, YG.elements[out.hom.table[a]],
                                                         YG.elements[out.hom.table[b]]) -
                                        net_uniform_distance(S.comp, SG.elements[a], SG.elements[b]));
    }
  }
  rep.closed("thmgrouphom", hom, 2.0);
  rep.closed("ClCpTNExp", cl_tnexp, 4.0);

  r.schedule = {8 * eps, 4 * eps, 2 * eps, eps};
  r.phi_profile = tb_profile(signal_matrix(S.extended), r.schedule);
  r.g_profile = tb_profile(group_matrix(S.comp, SG.elements), r.schedule);
  r.f_profile = tb_profile(d3, r.schedule);
  rep.add("PPCp", static_cast<double>(profile_decreases(r.phi_profile) + profile_decreases(r.g_profile)), 0.0);
  rep.add("TdHtFComp", static_cast<double>(profile_decreases(r.f_profile)), 0.0);

  r.net_sizes.phi_bar = S.closed_signals.members.size();
  r.net_sizes.g_bar = SG.elements.size();
  r.net_sizes.f_bar = greedy_eps_net(d3, eps).centers.size();
  r.net_sizes.psi_bar = Y.closed_signals.members.size();
  r.net_sizes.h_bar = YG.elements.size();
  r.saturated = S.comp.xhat.saturated && Y.comp.xhat.saturated && SG.saturated && YG.saturated;
  return out;
}

CompactificationReport verify_compactification(const PresentedPair& src, const PresentedPair& dst,
                                               const GeneoSpace& space, double eps, const CompactifyOptions& opts) {
  return compactify(src, dst, space, eps, opts).report;
}

CompactificationReport verify_compactification(const GeneoSpace& space, double eps, const CompactifyOptions& opts) {
  return verify_compactification(exact_presented(space.source_ptr()), exact_presented(space.target_ptr()), space, eps,
                                 opts);
}

}  // namespace geneo
