#include "geneo/completion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geneo/error.hpp"

namespace geneo {

DensePresentation finite_presentation(const DistanceMatrix& d) {
  DensePresentation p;
  const std::size_t n = d.size();
  p.enumerate = [n](std::size_t rank) -> std::optional<Descriptor> {
    if (rank >= n) return std::nullopt;
    return Descriptor{Rational(static_cast<std::int64_t>(rank))};
  };
  p.dist = [d](const Descriptor& a, const Descriptor& b) {
    return d(static_cast<std::size_t>(a.at(0).num()), static_cast<std::size_t>(b.at(0).num()));
  };
  p.sample_size = n;
  return p;
}

namespace {

struct Exploration {
  std::vector<Descriptor> explored;
  std::vector<std::size_t> net;  // indices into explored
  bool saturated = false;
};

Exploration explore(const DensePresentation& p, double eps, const CompletionOptions& opts) {
  Exploration ex;
  std::size_t quiet = 0;
  for (std::size_t rank = 0; rank < opts.budget; ++rank) {
    std::optional<Descriptor> desc = p.enumerate(rank);
    if (!desc) {
      ex.saturated = true;
      break;
    }
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t c : ex.net) nearest = std::min(nearest, p.dist(*desc, ex.explored[c]));
    const bool sample = rank < p.sample_size;
    ex.explored.push_back(std::move(*desc));
    if (sample || nearest > eps) {
      ex.net.push_back(rank);
      if (!sample) quiet = 0;
    } else if (++quiet >= opts.window) {
      ex.saturated = true;
      break;
    }
  }
  if (ex.explored.size() < p.sample_size && !ex.saturated) {
    fail(ErrorKind::Parameter, "budget smaller than the sample size");
  }
  return ex;
}

}  // namespace

CompletionApprox completion_net(const DensePresentation& p, double eps, const CompletionOptions& opts) {
  if (!(eps > 0.0) || !std::isfinite(eps)) fail(ErrorKind::Parameter, "eps must be positive and finite");
  Exploration ex = explore(p, eps, opts);

  CompletionApprox c;
  c.eps = eps;
  c.explored = ex.explored.size();
  c.saturated = ex.saturated;
  const std::size_t m = ex.net.size();
  c.points.reserve(m);
  for (std::size_t k : ex.net) c.points.push_back(ex.explored[k]);
  c.space = DistanceMatrix(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const double v = p.dist(c.points[a], c.points[b]);
      c.space.at(a, b) = v;
      c.space.at(b, a) = v;
    }
  }
  // Samples are the first net entries in rank order.
  const std::size_t samples = std::min(p.sample_size, m);
  for (std::size_t r = 0; r < samples; ++r) c.sample_embedding.push_back(r);

  c.coverage.resize(ex.explored.size());
  for (std::size_t r = 0; r < ex.explored.size(); ++r) {
    Cover best{0, std::numeric_limits<double>::infinity()};
    for (std::size_t a = 0; a < m; ++a) {
      const double v = p.dist(ex.explored[r], c.points[a]);
      if (v < best.distance) best = {a, v};
    }
    c.coverage[r] = best;
  }
  return c;
}

std::vector<std::size_t> tb_profile(const DensePresentation& p, std::span<const double> eps_schedule,
                                    const CompletionOptions& opts) {
  check_schedule(eps_schedule);
  DensePresentation pool_source = p;
  pool_source.sample_size = 0;
  const Exploration ex = explore(pool_source, eps_schedule.back(), opts);
  const auto& pts = ex.explored;
  const FarthestPointOrder fpo = farthest_point_order(pts.size(), [&](std::size_t i, std::span<double> out) {
    for (std::size_t j = 0; j < pts.size(); ++j) out[j] = p.dist(pts[i], pts[j]);
  }, eps_schedule.back());
  std::vector<std::size_t> sizes;
  for (double eps : eps_schedule) sizes.push_back(fpo.net_size(eps));
  return sizes;
}

}  // namespace geneo
