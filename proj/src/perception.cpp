#include "geneo/perception.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "geneo/error.hpp"

namespace geneo {

Signal Signal::of(std::vector<double> values) {
  double b = 0.0;
  for (double v : values) b = std::max(b, std::abs(v));
  return Signal{std::move(values), b};
}

double signal_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    fail(ErrorKind::Shape, "signals over domains of size " + std::to_string(a.size()) + " and " +
                               std::to_string(b.size()));
  }
  return kernels::sup_abs_diff(a, b);
}

double signal_distance(const Signal& a, const Signal& b) { return signal_distance(a.values, b.values); }

SignalSpace SignalSpace::build(std::vector<Signal> signals, double tol) {
  SignalSpace s;
  s.tol_ = tol;
  if (!signals.empty()) s.domain_size_ = signals.front().size();
  for (std::size_t k = 0; k < signals.size(); ++k) {
    Signal& sig = signals[k];
    if (sig.size() != s.domain_size_) {
      fail(ErrorKind::Shape, "signal " + std::to_string(k) + " has " + std::to_string(sig.size()) +
                                 " values, expected " + std::to_string(s.domain_size_));
    }
    for (double v : sig.values) {
      if (!std::isfinite(v)) fail(ErrorKind::MalformedInput, "non-finite value in signal " + std::to_string(k));
    }
    for (double v : sig.values) sig.bound = std::max(sig.bound, std::abs(v));
    const std::size_t existing = s.find(sig.values);
    if (existing != kNoMatch) {
      s.dedup_map_.push_back(existing);
      continue;
    }
    s.dedup_map_.push_back(s.signals_.size());
    s.signals_.push_back(std::move(sig));
  }
  return s;
}

NearestSignal SignalSpace::nearest(std::span<const double> values) const {
  NearestSignal best;
  for (std::size_t k = 0; k < signals_.size(); ++k) {
    const double d = signal_distance(signals_[k].values, values);
    if (d < best.distance) best = {k, d};
  }
  return best;
}

NearestSignal SignalSpace::nearest_composite(std::span<const double> values, std::span<const PointIndex> perm) const {
  NearestSignal best;
  for (std::size_t k = 0; k < signals_.size(); ++k) {
    const double d = kernels::sup_abs_diff_gather(signals_[k].values, values, perm);
    if (d < best.distance) best = {k, d};
  }
  return best;
}

std::size_t SignalSpace::find(std::span<const double> values) const {
  for (std::size_t k = 0; k < signals_.size(); ++k) {
    if (signal_distance(signals_[k].values, values) <= tol_) return k;
  }
  return kNoMatch;
}

OperationMap OperationMap::from_forward(std::vector<PointIndex> forward, std::size_t n) {
  if (forward.size() != n) {
    fail(ErrorKind::MalformedOperation, "operation defined on " + std::to_string(forward.size()) +
                                            " points, domain has " + std::to_string(n));
  }
  std::vector<PointIndex> inv(n, 0);
  std::vector<bool> hit(n, false);
  bool bijective = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (forward[x] >= n) {
      fail(ErrorKind::MalformedOperation, "image " + std::to_string(forward[x]) + " of point " + std::to_string(x) +
                                              " is outside the domain");
    }
    if (hit[forward[x]]) bijective = false;
    hit[forward[x]] = true;
    inv[forward[x]] = static_cast<PointIndex>(x);
  }
  OperationMap g;
  g.forward = std::move(forward);
  if (bijective) g.inverse = std::move(inv);
  return g;
}

OperationMap OperationMap::identity(std::size_t n) {
  std::vector<PointIndex> f(n);
  std::iota(f.begin(), f.end(), PointIndex{0});
  return OperationMap{f, f};
}

OperationMap OperationMap::inverted() const {
  if (!inverse) fail(ErrorKind::MalformedOperation, "operation is not bijective");
  return OperationMap{*inverse, forward};
}

OperationMap compose(const OperationMap& a, const OperationMap& b) {
  if (a.size() != b.size()) fail(ErrorKind::Shape, "composing operations on different domains");
  std::vector<PointIndex> f(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) f[x] = a.forward[b.forward[x]];
  return OperationMap::from_forward(std::move(f), b.size());
}

double uniform_distance(const DistanceMatrix& d, const OperationMap& f, const OperationMap& g) {
  if (f.size() != d.size() || g.size() != d.size()) fail(ErrorKind::Shape, "operation size does not match domain");
  double m = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) m = std::max(m, d(f.forward[x], g.forward[x]));
  return m;
}

DistanceMatrix induce_point_metric(const SignalSpace& phi) {
  if (phi.size() == 0) fail(ErrorKind::Parameter, "cannot induce a metric from an empty signal space");
  const std::size_t n = phi.domain_size();
  DistanceMatrix d(n);
  for (const Signal& s : phi.signals()) {
    for (std::size_t i = 0; i < n; ++i) kernels::max_abs_diff_accumulate(d.row(i), s.values, s.values[i]);
  }
  return d;
}

OperationCheck validate_operation(const SignalSpace& phi, const OperationMap& g) {
  const std::size_t n = phi.domain_size();
  if (g.size() != n) {
    fail(ErrorKind::MalformedOperation, "operation is defined on " + std::to_string(g.size()) +
                                            " points, domain has " + std::to_string(n));
  }
  for (PointIndex y : g.forward) {
    if (y >= n) fail(ErrorKind::MalformedOperation, "operation maps outside the domain");
  }
  OperationCheck out;
  out.is_phi_op = true;
  auto scan = [&](std::span<const PointIndex> perm, std::vector<std::size_t>& match) {
    bool all = true;
    match.assign(phi.size(), kNoMatch);
    for (std::size_t k = 0; k < phi.size(); ++k) {
      const NearestSignal ns = phi.nearest_composite(phi[k].values, perm);
      out.residual = std::max(out.residual, ns.distance);
      if (ns.distance <= phi.tolerance()) {
        match[k] = ns.index;
      } else {
        all = false;
      }
    }
    return all;
  };
  out.is_phi_op = scan(g.forward, out.match);
  if (g.inverse) {
    const bool inv_ok = scan(*g.inverse, out.inverse_match);
    out.is_invertible = out.is_phi_op && inv_ok;
  }
  return out;
}

PerceptionPair PerceptionPair::create(std::vector<Signal> signals, std::vector<OperationMap> generators, double tol,
                                      std::size_t max_group) {
  PerceptionPair p;
  p.phi_ = SignalSpace::build(std::move(signals), tol);
  p.domain_ = induce_point_metric(p.phi_);
  const std::size_t n = p.domain_.size();

  for (std::size_t k = 0; k < generators.size(); ++k) {
    const OperationCheck chk = validate_operation(p.phi_, generators[k]);
    if (!chk.is_invertible) {
      fail(ErrorKind::Precondition, "group element " + std::to_string(k) +
                                        " is not an invertible Φ-operation (residual " +
                                        std::to_string(chk.residual) + ")");
    }
  }

  std::map<std::vector<PointIndex>, std::size_t> seen;
  auto intern = [&](OperationMap g) {
    auto [it, inserted] = seen.emplace(g.forward, p.group_.size());
    if (inserted) {
      if (p.group_.size() >= max_group) fail(ErrorKind::Parameter, "group exceeds the size cap");
      p.group_.push_back(std::move(g));
    }
    return it->second;
  };
  intern(OperationMap::identity(n));
  for (const OperationMap& g : generators) p.generators_.push_back(intern(g));
  for (std::size_t head = 0; head < p.group_.size(); ++head) {
    for (std::size_t s : p.generators_) {
      OperationMap prod = compose(p.group_[head], p.group_[s]);
      intern(std::move(prod));
    }
  }

  const std::size_t m = p.group_.size();
  p.cayley_.resize(m * m);
  p.inverse_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto it = seen.find(compose(p.group_[a], p.group_[b]).forward);
      if (it == seen.end()) fail(ErrorKind::InternalConsistency, "group is not closed under composition");
      p.cayley_[a * m + b] = it->second;
    }
    const auto it = seen.find(p.group_[a].inverted().forward);
    if (it == seen.end()) fail(ErrorKind::InternalConsistency, "group is not closed under inverses");
    p.inverse_[a] = it->second;
  }

  p.action_.resize(m * p.phi_.size());
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t k = 0; k < p.phi_.size(); ++k) {
      const NearestSignal ns = p.phi_.nearest_composite(p.phi_[k].values, p.group_[g].forward);
      if (ns.distance > tol) fail(ErrorKind::InternalConsistency, "saturated group element leaves Φ");
      p.action_[g * p.phi_.size() + k] = ns.index;
    }
  }
  return p;
}

std::optional<std::size_t> PerceptionPair::index_of(const OperationMap& g) const {
  for (std::size_t k = 0; k < group_.size(); ++k) {
    if (group_[k] == g) return k;
  }
  return std::nullopt;
}

AutomorphismSearch enumerate_automorphisms(const SignalSpace& phi, const DistanceMatrix& domain, std::size_t cap) {
  const std::size_t n = domain.size();
  const double tol = phi.tolerance();
  AutomorphismSearch out;
  std::vector<PointIndex> image(n);
  std::vector<bool> used(n, false);

  // Returns false once the cap stops the search.
  auto dfs = [&](auto&& self, std::size_t x) -> bool {
    if (x == n) {
      if (++out.candidates > cap) {
        out.complete = false;
        return false;
      }
      OperationMap g = OperationMap::from_forward(image, n);
      if (validate_operation(phi, g).is_invertible) out.maps.push_back(std::move(g));
      return true;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y]) continue;
      bool isometric = true;
      for (std::size_t prev = 0; prev < x && isometric; ++prev) {
        isometric = std::abs(domain(prev, x) - domain(image[prev], y)) <= tol;
      }
      if (!isometric) continue;
      used[y] = true;
      image[x] = static_cast<PointIndex>(y);
      const bool go_on = self(self, x + 1);
      used[y] = false;
      if (!go_on) return false;
    }
    return true;
  };
  dfs(dfs, 0);
  return out;
}

AutomorphismSearch enumerate_automorphisms(const PerceptionPair& pair, std::size_t cap) {
  return enumerate_automorphisms(pair.phi(), pair.domain(), cap);
}

double aut_distance(const PerceptionPair& pair, const OperationMap& g, const OperationMap& h) {
  const std::size_t n = pair.points();
  if (g.size() != n || h.size() != n) fail(ErrorKind::Shape, "operation size does not match domain");
  // Signal-first order: sup_φ ‖φ∘g − φ∘h‖.
  double by_signal = 0.0;
  std::vector<double> phig(n);
  for (const Signal& s : pair.phi().signals()) {
    for (std::size_t x = 0; x < n; ++x) phig[x] = s.values[g.forward[x]];
    by_signal = std::max(by_signal, kernels::sup_abs_diff_gather(phig, s.values, h.forward));
  }
  // Point-first order: sup_x D_X(g x, h x).
  const double by_point = uniform_distance(pair.domain(), g, h);
  if (std::abs(by_signal - by_point) > pair.tolerance()) {
    fail(ErrorKind::InternalConsistency, "D_Aut and d_inf disagree: " + std::to_string(by_signal) + " vs " +
                                             std::to_string(by_point));
  }
  return by_signal;
}

double aut_distance(const PerceptionPair& pair, std::size_t g, std::size_t h) {
  return aut_distance(pair, pair.group().at(g), pair.group().at(h));
}

double natural_pseudo_distance(std::span<const OperationMap> group, std::span<const double> a,
                               std::span<const double> b) {
  if (group.empty()) fail(ErrorKind::Parameter, "natural pseudo-distance over an empty group");
  if (a.size() != b.size()) fail(ErrorKind::Shape, "signals over different domains");
  double best = std::numeric_limits<double>::infinity();
  for (const OperationMap& g : group) {
    if (g.size() != a.size()) fail(ErrorKind::Shape, "operation size does not match signals");
    best = std::min(best, kernels::sup_abs_diff_gather(a, b, g.forward));
  }
  return best;
}

double natural_pseudo_distance(const PerceptionPair& pair, const Signal& a, const Signal& b) {
  if (a.size() != pair.points() || b.size() != pair.points()) {
    fail(ErrorKind::Shape, "signal is not defined on the pair's domain");
  }
  return natural_pseudo_distance(pair.group(), a.values, b.values);
}

SeparationResult separation_check(const DistanceMatrix& d, double tol) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d(i, j) <= tol) return {false, std::make_pair(i, j)};
    }
  }
  return {true, std::nullopt};
}

SeparationResult separation_check(const PerceptionPair& pair) {
  return separation_check(pair.domain(), pair.tolerance());
}

}  // namespace geneo
