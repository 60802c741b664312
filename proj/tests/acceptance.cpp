// Acceptance suite: one PASS/FAIL line per criterion. Expected values come
// from the brute-force oracles in oracles.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "geneo/compactify.hpp"
#include "geneo/scenarios.hpp"
#include "oracles.hpp"

using namespace geneo;

namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<oracle::Vec> signals_of(const PerceptionPair& p) {
  std::vector<oracle::Vec> out;
  for (const Signal& s : p.phi().signals()) out.push_back(s.values);
  return out;
}

std::vector<oracle::Perm> group_of(const PerceptionPair& p) {
  std::vector<oracle::Perm> out;
  for (const OperationMap& g : p.group()) out.push_back(g.forward);
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Operators φ ↦ φ∘s for every s in a cyclic group, with T = id.
std::shared_ptr<const GeneoSpace> precompose_all(const std::shared_ptr<const PerceptionPair>& pair) {
  std::vector<Geneo> ops;
  for (std::size_t s = 0; s < pair->group().size(); ++s) {
    Geneo f;
    for (std::size_t i = 0; i < pair->phi().size(); ++i) f.table.push_back(pair->act(s, i));
    ops.push_back(std::move(f));
  }
  return std::make_shared<const GeneoSpace>(
      GeneoSpace::create(pair, pair, Homomorphism::identity(pair->group().size()), std::move(ops)));
}

double pseudo_metric_residual(std::size_t n, const std::function<double(std::size_t, std::size_t)>& d) {
  double r = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    r = std::max(r, std::abs(d(a, a)));
    for (std::size_t b = 0; b < n; ++b) {
      r = std::max({r, -d(a, b), std::abs(d(a, b) - d(b, a))});
      for (std::size_t c = 0; c < n; ++c) r = std::max(r, d(a, c) - d(a, b) - d(b, c));
    }
  }
  return r;
}

Outcome criterion1() {
  double worst = 0.0;
  std::size_t aut_checked = 0;
  bool sets_ok = true;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto pair = gen_random_finite(seed, {8, 12});
    const auto phi = signals_of(*pair);
    const std::size_t n = pair->points();
    const oracle::Mat dx = oracle::point_metric(phi, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(pair->domain()(i, j) - dx[i][j]));

    // signals are non-expansive for D_X
    for (const auto& s : phi)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(s[i] - s[j]) - dx[i][j]);

    std::vector<oracle::Perm> gens;
    for (std::size_t g : pair->generators()) gens.push_back(pair->group()[g].forward);
    const auto closed = oracle::closure(gens, n);
    const auto group = group_of(*pair);
    sets_ok &= std::set<oracle::Perm>(group.begin(), group.end()) == closed;

    // automorphisms are D_X isometries; the set matches brute force on small domains
    const AutomorphismSearch aut = enumerate_automorphisms(*pair);
    for (const OperationMap& g : aut.maps)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(dx[g.forward[i]][g.forward[j]] - dx[i][j]));
    if (n <= 6) {
      std::vector<oracle::Perm> lib;
      for (const OperationMap& g : aut.maps) lib.push_back(g.forward);
      sets_ok &= lib == oracle::automorphisms(phi, n, kTol);
      ++aut_checked;
    }

    for (std::size_t g = 0; g < group.size(); ++g) {
      for (std::size_t h = 0; h < group.size(); ++h) {
        const double lib = aut_distance(*pair, g, h);
        worst = std::max(worst, std::abs(lib - oracle::d_inf(dx, group[g], group[h])));
        worst = std::max(worst, std::abs(lib - oracle::aut_by_signals(phi, group[g], group[h])));
      }
    }

    const std::size_t m = phi.size();
    oracle::Mat dg(m, oracle::Vec(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        dg[a][b] = natural_pseudo_distance(*pair, pair->phi()[a], pair->phi()[b]);
        worst = std::max(worst, std::abs(dg[a][b] - oracle::natural(group, phi[a], phi[b])));
        worst = std::max(worst, dg[a][b] - oracle::sup_diff(phi[a], phi[b]));
      }
    }
    worst = std::max(worst, pseudo_metric_residual(m, [&](std::size_t a, std::size_t b) { return dg[a][b]; }));

    const auto space = precompose_all(pair);
    const auto& ops = space->operators();
    worst = std::max(worst, pseudo_metric_residual(ops.size(), [&](std::size_t a, std::size_t b) {
      return geneo_distance(ops[a], ops[b], *pair);
    }));
    worst = std::max(worst, pseudo_metric_residual(ops.size(), [&](std::size_t a, std::size_t b) {
      return geneo_distance_natural(ops[a], ops[b], *pair);
    }));
    worst = std::max(worst, pseudo_metric_residual(m, [&](std::size_t a, std::size_t b) {
      return signal_distance_via_geneos(*space, a, b);
    }));
    for (std::size_t a = 0; a < ops.size(); ++a) {
      for (std::size_t b = 0; b < ops.size(); ++b) {
        double expect = 0.0;
        for (std::size_t i = 0; i < m; ++i) expect = std::max(expect, oracle::sup_diff(phi[ops[a].table[i]], phi[ops[b].table[i]]));
        worst = std::max(worst, std::abs(geneo_distance(ops[a], ops[b], *pair) - expect));
      }
    }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        worst = std::max(worst, signal_distance_via_geneos(*space, a, b) - oracle::sup_diff(phi[a], phi[b]));
  }
  return {worst <= kTol && sets_ok, "max residual " + fmt(worst) + ", group/automorphism sets " +
                                        (sets_ok ? "match" : "MISMATCH") + " (" + std::to_string(aut_checked) +
                                        " brute-forced)"};
}

std::vector<std::shared_ptr<const GeneoSpace>>& spaces500() {
  static std::vector<std::shared_ptr<const GeneoSpace>> s = [] {
    std::vector<std::shared_ptr<const GeneoSpace>> v;
    for (std::uint64_t seed = 0; seed < 500; ++seed) v.push_back(gen_random_space(seed));
    return v;
  }();
  return s;
}

Outcome criterion2() {
  double worst = 0.0, worst_oracle = 0.0, disagree = 0.0;
  std::size_t not_surjective = 0;
  for (const auto& sp : spaces500()) {
    const GeneoSpace& space = *sp;
    std::set<std::size_t> hit;
    for (const Geneo& f : space.operators()) hit.insert(f.table.begin(), f.table.end());
    const bool covered = hit.size() == space.target().phi().size();
    if (!covered || !collectionwise_surjective(space).covered) ++not_surjective;

    const HomNonexpansiveResult r = check_hom_nonexpansive(space);
    worst = std::max(worst, r.max_violation);

    const auto g = group_of(space.source());
    const auto h = group_of(space.target());
    const auto dx = oracle::point_metric(signals_of(space.source()), space.source().points());
    const auto dy = oracle::point_metric(signals_of(space.target()), space.target().points());
    const auto& T = space.hom().table;
    double v = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        v = std::max(v, oracle::d_inf(dy, h[T[a]], h[T[b]]) - oracle::d_inf(dx, g[a], g[b]));
    worst_oracle = std::max(worst_oracle, v);
    disagree = std::max(disagree, std::abs(v - r.max_violation));
  }
  return {worst <= kTol && worst_oracle <= kTol && disagree <= kTol && not_surjective == 0,
          "max violation " + fmt(worst) + " (oracle " + fmt(worst_oracle) + "), " + std::to_string(not_surjective) +
              " non-surjective"};
}

Outcome criterion3() {
  double worst = -std::numeric_limits<double>::infinity(), disagree = 0.0;
  std::size_t pairs = 0;
  for (const auto& sp : spaces500()) {
    for (const PerceptionPair* p : {&sp->source(), &sp->target()}) {
      const auto phi = signals_of(*p);
      const auto g = group_of(*p);
      const auto dx = oracle::point_metric(phi, p->points());
      std::vector<std::vector<oracle::Vec>> moved(g.size());
      for (std::size_t a = 0; a < g.size(); ++a)
        for (const auto& s : phi) moved[a].push_back(oracle::precompose(s, g[a]));
      for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < g.size(); ++b) {
          const auto dist = [&](std::size_t i, std::size_t j) { return oracle::sup_diff(moved[a][i], moved[b][j]); };
          const double lib = hausdorff_distance(phi.size(), phi.size(), dist);
          const double ref = oracle::hausdorff(phi.size(), phi.size(), dist);
          disagree = std::max(disagree, std::abs(lib - ref));
          worst = std::max(worst, lib - oracle::d_inf(dx, g[a], g[b]));
          ++pairs;
        }
      }
    }
  }
  return {worst <= kTol && disagree <= kTol,
          "max Hausdorff - d_inf " + fmt(worst) + " over " + std::to_string(pairs) + " group pairs"};
}

double min_positive(double current, double v) { return v > 0.0 ? std::min(current, v) : current; }

Outcome criterion4() {
  double worst_residual = 0.0, worst_time = 0.0;
  std::size_t net_mismatch = 0, runs = 0;
  std::vector<std::shared_ptr<const GeneoSpace>> cases(spaces500().begin(), spaces500().begin() + 60);
  for (std::uint64_t seed = 0; seed < 20; ++seed) cases.push_back(precompose_all(gen_random_finite(seed + 7000)));
  for (const auto& sp : cases) {
    const GeneoSpace& space = *sp;
    double sep = std::numeric_limits<double>::infinity();
    for (const PerceptionPair* p : {&space.source(), &space.target()}) {
      const auto phi = signals_of(*p);
      const auto g = group_of(*p);
      const auto d = oracle::point_metric(phi, p->points());
      for (const auto& a : phi)
        for (const auto& b : phi) sep = min_positive(sep, oracle::sup_diff(a, b));
      for (const auto& row : d)
        for (double v : row) sep = min_positive(sep, v);
      for (const auto& a : g)
        for (const auto& b : g) sep = min_positive(sep, oracle::d_inf(d, a, b));
    }
    const auto psi = signals_of(space.target());
    for (const Geneo& a : space.operators()) {
      for (const Geneo& b : space.operators()) {
        double dg = 0.0;
        for (std::size_t i = 0; i < a.table.size(); ++i) dg = std::max(dg, oracle::sup_diff(psi[a.table[i]], psi[b.table[i]]));
        sep = min_positive(sep, dg);
      }
    }
    const double eps = sep / 2.0;

    const auto t0 = std::chrono::steady_clock::now();
    const Compactification c =
        compactify(exact_presented(space.source_ptr()), exact_presented(space.target_ptr()), space, eps);
    worst_time = std::max(worst_time, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    ++runs;
    for (const Condition& cond : c.report.conditions) worst_residual = std::max(worst_residual, std::abs(cond.residual));

    const auto same_group = [](const SideArtifacts& s, const PerceptionPair& p) {
      std::set<oracle::Perm> listed, expect;
      for (const InducedOperation& e : s.closed_group.elements) listed.insert(e.forward);
      for (const OperationMap& g : p.group()) expect.insert(g.forward);
      return listed == expect && s.closed_group.elements.size() == p.group().size() && s.closed_group.saturated;
    };
    const auto same_signals = [](const SideArtifacts& s, const PerceptionPair& p) {
      std::set<std::size_t> idx(s.closed_signals.source_index.begin(), s.closed_signals.source_index.end());
      return idx.size() == p.phi().size() && s.comp.size() == p.points();
    };
    std::set<std::vector<std::size_t>> distinct;
    for (const Geneo& f : space.operators()) distinct.insert(f.table);
    const bool nets_ok = same_group(c.source, space.source()) && same_group(c.target, space.target()) &&
                         same_signals(c.source, space.source()) && same_signals(c.target, space.target()) &&
                         c.report.net_sizes.f_bar == distinct.size() && c.report.saturated;
    if (!nets_ok) ++net_mismatch;
  }
  return {worst_residual == 0.0 && net_mismatch == 0 && worst_time <= 5.0,
          std::to_string(runs) + " pairs, max residual " + fmt(worst_residual) + ", " + std::to_string(net_mismatch) +
              " net mismatches, slowest " + fmt(worst_time) + " s"};
}

Outcome criterion5() {
  const std::vector<double> schedule{0.08, 0.04, 0.02, 0.01};
  std::vector<Rational> angles;
  for (int k = 1; k <= 12; ++k) angles.push_back(Rational(1, std::int64_t{1} << k));

  std::vector<std::size_t> group_sizes, net_sizes;
  bool covered_all = true;
  double worst_cover = 0.0, worst_analytic = 0.0;
  std::size_t checked = 0;
  for (double eps : schedule) {
    PresentedPair p;
    p.pair = gen_circle(4, std::vector<std::int64_t>{4}).pair;
    p.presentation = circle_presentation(4);
    const CompletionPair comp = make_completion_pair(p, eps);
    std::vector<InducedOperation> gens;
    for (const Rational& a : angles) gens.push_back(induce_action(circle_rotation(a), comp, eps));
    const ClosedGroup g = closure_group(gens, comp, eps);
    covered_all &= comp.xhat.saturated && g.saturated;
    net_sizes.push_back(comp.size());
    group_sizes.push_back(g.elements.size());
    if (eps != 0.01) continue;

    // Angle of every listed element, from its generator word.
    std::vector<Rational> angle(g.elements.size());
    for (std::size_t e = 1; e < g.elements.size(); ++e) angle[e] = (angle[g.parent[e]] + angles[g.via[e]]).frac();

    GroupLocator loc(comp);
    for (std::size_t e = 0; e < g.elements.size(); ++e) loc.add(g.elements[e], e);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> pick(0, 4095);
    for (int trial = 0; trial < 1000; ++trial) {
      const Rational q(pick(rng), 4096);
      const InducedOperation rq = induce_action(circle_rotation(q), comp, eps);
      double best = std::numeric_limits<double>::infinity(), best_analytic = best;
      std::vector<std::size_t> cand = loc.within(rq, g.elements, 3 * eps);
      cand.push_back(loc.nearest(rq, g.elements).center);
      for (std::size_t e : cand) {
        const double d = exact_uniform_distance(comp, circle_rotation(q), g.elements[e].act);
        if (d < best) {
          best = d;
          best_analytic = oracle::circle_metric(q.to_double(), angle[e].to_double());
        }
      }
      worst_cover = std::max(worst_cover, best);
      worst_analytic = std::max(worst_analytic, best_analytic);
      covered_all &= best <= eps && best_analytic <= eps;
      ++checked;
    }
  }
  bool linear = true;
  for (std::size_t k = 1; k < schedule.size(); ++k) {
    linear &= static_cast<double>(group_sizes[k]) * schedule[k] >= static_cast<double>(group_sizes[0]) * schedule[0] - 1e-12;
    linear &= static_cast<double>(net_sizes[k]) * schedule[k] >= static_cast<double>(net_sizes[0]) * schedule[0] - 1e-12;
    linear &= group_sizes[k] >= 2 * group_sizes[k - 1] && net_sizes[k] >= 2 * net_sizes[k - 1];
  }
  std::string sizes;
  for (std::size_t k = 0; k < schedule.size(); ++k) sizes += (k ? "," : "") + std::to_string(group_sizes[k]);
  return {covered_all && linear && checked == 1000,
          std::to_string(checked) + " rotations, worst d_inf " + fmt(worst_cover) + " (analytic " + fmt(worst_analytic) +
              "), group nets " + sizes};
}

Outcome criterion6() {
  const std::vector<std::int64_t> denoms{2, 4, 8, 16, 32, 64};
  const std::vector<std::size_t> shifts{0, 1, 5, 16, 32};
  const CircleSpace cs = gen_circle_space(64, denoms, shifts);
  const PerceptionPair& pair = *cs.circle.pair;
  const double eps = 0.05, bound = 0.1;
  const Compactification c = compactify(cs.circle.presented, cs.circle.presented, *cs.space, eps);

  // Analytic identities on the grid
  double analytic = 0.0;
  const auto& rot = cs.circle.rotation;
  for (std::size_t g = 0; g < rot.size(); ++g)
    for (std::size_t h = 0; h < rot.size(); ++h)
      analytic = std::max(analytic, std::abs(aut_distance(pair, g, h) -
                                             oracle::circle_metric(rot[g].to_double(), rot[h].to_double())));
  const auto& ops = cs.space->operators();
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = 0; b < ops.size(); ++b)
      analytic = std::max(analytic, std::abs(geneo_distance(ops[a], ops[b], pair) -
                                             oracle::circle_metric(shifts[a] / 64.0, shifts[b] / 64.0)));

  // Isometry ladder recomputed from the pipeline artifacts
  const auto phi = signals_of(pair);
  const auto& S = c.source;
  double ladder_phi = 0.0, ladder_aut = 0.0, ladder_f = 0.0;
  for (std::size_t a = 0; a < phi.size(); ++a)
    for (std::size_t b = 0; b < phi.size(); ++b)
      ladder_phi = std::max(ladder_phi, std::abs(oracle::sup_diff(S.extended[a].values, S.extended[b].values) -
                                                 oracle::sup_diff(phi[a], phi[b])));
  const oracle::Mat net = S.comp.metric().to_rows();
  for (std::size_t g = 0; g < rot.size(); ++g)
    for (std::size_t h = 0; h < rot.size(); ++h)
      ladder_aut = std::max(ladder_aut, std::abs(oracle::d_inf(net, S.induced[g].forward, S.induced[h].forward) -
                                                 oracle::circle_metric(rot[g].to_double(), rot[h].to_double())));
  for (std::size_t a = 0; a < ops.size(); ++a) {
    for (std::size_t b = 0; b < ops.size(); ++b) {
      double d3 = 0.0;
      for (std::size_t i = 0; i < phi.size(); ++i) {
        d3 = std::max(d3, oracle::sup_diff(c.target.closed_signals.members[c.operators[a].on_phihat[i]].values,
                                           c.target.closed_signals.members[c.operators[b].on_phihat[i]].values));
      }
      ladder_f = std::max(ladder_f, std::abs(d3 - oracle::circle_metric(shifts[a] / 64.0, shifts[b] / 64.0)));
    }
  }

  bool named_ok = true;
  std::string failing;
  for (const char* name : {"ExtSgIso[X]", "kiso[X]", "ExtSgIso[Y]", "kiso[Y]", "f1Iso", "f2Iso", "ComGN4"}) {
    const Condition* cond = c.report.find(name);
    if (!cond || cond->residual > bound) named_ok = false, failing += std::string(" ") + name;
  }
  for (const char* name : {"ComSg[X]", "ComBj[X]", "ComSg[Y]", "ComBj[Y]", "ComGN1", "ComGN2", "ComGNT", "ComGNF"}) {
    const Condition* cond = c.report.find(name);
    if (!cond || !cond->pass) named_ok = false, failing += std::string(" ") + name;
  }
  const bool ok = named_ok && c.report.all_pass() && analytic <= kTol && ladder_phi <= bound && ladder_aut <= bound &&
                  ladder_f <= bound;
  return {ok, "ladder |D_phi|=" + fmt(ladder_phi) + " |D_aut|=" + fmt(ladder_aut) + " |D3|=" + fmt(ladder_f) +
                  ", analytic " + fmt(analytic) + ", " + std::to_string(c.report.conditions.size()) + " conditions" +
                  (failing.empty() ? "" : ", failing:" + failing)};
}

struct Micro {
  std::shared_ptr<const PerceptionPair> src, dst;
  Homomorphism hom;
};

Micro micro(bool same) {
  std::vector<Signal> phi{Signal::of({0, 0.5, 1}), Signal::of({1, 0.5, 0}), Signal::of({0.5, 0.5, 0.5})};
  auto src = std::make_shared<const PerceptionPair>(
      PerceptionPair::create(phi, {OperationMap::from_forward({2, 1, 0}, 3)}));
  if (same) return {src, src, Homomorphism::identity(2)};
  std::vector<Signal> psi{Signal::of({0, 1}), Signal::of({1, 0}), Signal::of({0.25, 0.25})};
  auto dst = std::make_shared<const PerceptionPair>(PerceptionPair::create(psi, {OperationMap::from_forward({1, 0}, 2)}));
  return {src, dst, Homomorphism{{0, 1}}};
}

Outcome criterion7() {
  std::size_t total_valid = 0;
  bool ok = true;
  double worst = 0.0;
  for (bool same : {true, false}) {
    const Micro m = micro(same);
    const auto phi = signals_of(*m.src);
    const auto psi = signals_of(*m.dst);
    const auto g = group_of(*m.src);
    std::vector<oracle::Perm> tg;
    for (std::size_t k = 0; k < g.size(); ++k) tg.push_back(m.dst->group()[m.hom.table[k]].forward);
    ok &= phi.size() == 3 && psi.size() == 3 && g.size() == 2 && m.dst->group().size() == 2;

    const auto expect = oracle::all_geneos(phi, psi, g, tg, kTol);
    const GeneoEnumeration found = enumerate_geneos(*m.src, *m.dst, m.hom);
    std::vector<std::vector<std::size_t>> got;
    for (const Geneo& f : found.operators) got.push_back(f.table);
    ok &= found.complete && got == expect;
    total_valid += got.size();

    const PresentedPair ps = exact_presented(m.src), pd = exact_presented(m.dst);
    const CompletionPair cs = make_completion_pair(ps, 0.1), cd = make_completion_pair(pd, 0.1);
    const auto phihat = extend_signals(m.src->phi(), cs);
    const auto psihat = extend_signals(m.dst->phi(), cd);
    std::vector<oracle::Vec> phv, psv;
    for (const auto& e : phihat) phv.push_back(e.values);
    for (const auto& e : psihat) psv.push_back(e.values);
    std::vector<oracle::Perm> gh, th;
    for (std::size_t k = 0; k < g.size(); ++k) {
      gh.push_back(induce_operation(ps, k, cs, 0.1).forward);
      th.push_back(induce_operation(pd, m.hom.table[k], cd, 0.1).forward);
    }
    std::vector<InducedGeneo> induced;
    for (const Geneo& f : found.operators) {
      induced.push_back(induce_geneo(f, phihat, psihat));
      const auto r = oracle::geneo_residuals(phv, psv, induced.back().table, gh, th, kTol);
      worst = std::max({worst, r.equiv, r.exp});
    }
    for (std::size_t a = 0; a < induced.size(); ++a) {
      for (std::size_t b = 0; b < induced.size(); ++b) {
        double d1 = 0.0;
        for (std::size_t i = 0; i < phv.size(); ++i) d1 = std::max(d1, oracle::sup_diff(psv[induced[a].table[i]], psv[induced[b].table[i]]));
        worst = std::max(worst, std::abs(d1 - geneo_distance(found.operators[a], found.operators[b], *m.dst)));
      }
    }
    // the operator space is finite, so every net on it terminates
    DistanceMatrix dops(found.operators.size());
    for (std::size_t a = 0; a < found.operators.size(); ++a)
      for (std::size_t b = 0; b < found.operators.size(); ++b)
        dops.at(a, b) = geneo_distance(found.operators[a], found.operators[b], *m.dst);
    for (double eps : {1.0, 0.5, 0.25, 0.1, 0.01}) ok &= !greedy_eps_net(dops, eps).centers.empty();
  }
  return {ok && worst == 0.0, std::to_string(total_valid) + " valid GENEOs over two instances, max residual " + fmt(worst)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 proposition suite on 500 random finite pairs", 60, criterion1},
      {"2 homomorphism non-expansivity on 500 surjective spaces", 60, criterion2},
      {"3 chi non-expansivity on the same 500 spaces", 60, criterion3},
      {"4 exact-finite compactification fixed point", 300, criterion4},
      {"5 circle density of the dyadic rotation closure", 120, criterion5},
      {"6 isometry ladder on the circle, M = 64, eps = 0.05", 120, criterion6},
      {"7 micro brute-force operator enumeration", 30, criterion7},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) o.pass = false, o.detail += ", over time limit";
    std::printf("[%s] criterion %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
