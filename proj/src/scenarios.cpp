#include "geneo/scenarios.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "geneo/error.hpp"

namespace geneo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGrid = 1.0 / 16.0;

Rational circular(const Rational& a, const Rational& b) {
  const Rational f = (a - b).frac();
  const Rational g = Rational(1) - f;
  return f < g ? f : g;
}

}  // namespace

double circle_distance(const Rational& a, const Rational& b) {
  return std::min(kTwoPi * circular(a, b).to_double(), 1.0);
}

DensePresentation circle_presentation(std::size_t m) {
  DensePresentation p;
  const auto mm = static_cast<std::int64_t>(m);
  p.enumerate = [mm](std::size_t rank) -> std::optional<Descriptor> {
    if (rank < static_cast<std::size_t>(mm)) return Descriptor{Rational(static_cast<std::int64_t>(rank), mm)};
    const std::uint64_t r = rank - static_cast<std::size_t>(mm) + 1;
    const int level = std::bit_width(r);  // level L holds 2^(L-1) odd multiples of 2^-L
    if (level > 60) return std::nullopt;
    const std::uint64_t i = r - (std::uint64_t{1} << (level - 1));
    return Descriptor{Rational(static_cast<std::int64_t>(2 * i + 1), std::int64_t{1} << level)};
  };
  p.dist = [](const Descriptor& a, const Descriptor& b) { return circle_distance(a.at(0), b.at(0)); };
  p.sample_size = m;
  return p;
}

PointAction circle_rotation(Rational angle) {
  return [angle](const Descriptor& d) { return Descriptor{(d.at(0) + angle).frac()}; };
}

PresentedPair circle_presented(std::shared_ptr<const PerceptionPair> pair, std::size_t m) {
  if (pair->points() != m) fail(ErrorKind::Parameter, "pair size differs from the circle grid");
  const auto mm = static_cast<std::int64_t>(m);
  std::vector<Rational> rot;
  for (const OperationMap& g : pair->group()) {
    const std::size_t k = g.forward[0];
    for (std::size_t x = 0; x < m; ++x) {
      if (g.forward[x] != (x + k) % m) fail(ErrorKind::Parameter, "group element is not a grid rotation");
    }
    rot.push_back(Rational(static_cast<std::int64_t>(k), mm));
  }
  PresentedPair p;
  p.pair = std::move(pair);
  p.presentation = circle_presentation(m);
  p.act = [rot = std::move(rot)](std::size_t g, const Descriptor& d) { return Descriptor{(d.at(0) + rot.at(g)).frac()}; };
  return p;
}

CircleScenario gen_circle(std::size_t m, std::span<const std::int64_t> denoms) {
  if (m < 4) fail(ErrorKind::Parameter, "circle grid needs at least four points");
  if (denoms.empty()) fail(ErrorKind::Parameter, "no rotation denominators");
  if (m > (std::size_t{1} << 20)) fail(ErrorKind::Parameter, "circle grid too large");
  const auto mm = static_cast<std::int64_t>(m);
  std::vector<OperationMap> gens;
  for (std::int64_t q : denoms) {
    if (q <= 0 || mm % q != 0) {
      fail(ErrorKind::Parameter, "rotation 1/" + std::to_string(q) + " does not map the " + std::to_string(m) +
                                     "-point grid to itself");
    }
    const std::size_t step = m / static_cast<std::size_t>(q);
    std::vector<PointIndex> fwd(m);
    for (std::size_t x = 0; x < m; ++x) fwd[x] = static_cast<PointIndex>((x + step) % m);
    gens.push_back(OperationMap::from_forward(std::move(fwd), m));
  }
  std::vector<Signal> tents;
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<double> v(m);
    for (std::size_t x = 0; x < m; ++x) {
      const Rational d = circular(Rational(static_cast<std::int64_t>(x), mm), Rational(static_cast<std::int64_t>(c), mm));
      v[x] = std::max(0.0, 1.0 - kTwoPi * d.to_double());
    }
    tents.push_back(Signal::of(std::move(v)));
  }

  CircleScenario s;
  s.m = m;
  s.denoms.assign(denoms.begin(), denoms.end());
  auto pair = std::make_shared<const PerceptionPair>(PerceptionPair::create(std::move(tents), std::move(gens)));
  for (const OperationMap& g : pair->group()) s.rotation.push_back(Rational(g.forward[0], mm));
  s.presented = circle_presented(pair, m);
  s.pair = std::move(pair);
  return s;
}

CircleSpace gen_circle_space(std::size_t m, std::span<const std::int64_t> denoms, std::span<const std::size_t> shifts) {
  CircleSpace out;
  out.circle = gen_circle(m, denoms);
  const PerceptionPair& pair = *out.circle.pair;
  std::vector<std::size_t> wanted(shifts.begin(), shifts.end());
  if (wanted.empty()) {
    for (std::size_t g = 0; g < pair.group().size() && wanted.size() < 4; ++g) {
      wanted.push_back(pair.group()[g].forward[0]);
    }
  }
  std::vector<Geneo> ops;
  for (std::size_t k : wanted) {
    std::size_t g = kNoMatch;
    for (std::size_t e = 0; e < pair.group().size(); ++e) {
      if (pair.group()[e].forward[0] == k % m) g = e;
    }
    if (g == kNoMatch) fail(ErrorKind::Parameter, "shift " + std::to_string(k) + " is not in the rotation group");
    Geneo f;
    for (std::size_t i = 0; i < pair.phi().size(); ++i) f.table.push_back(pair.act(g, i));
    ops.push_back(std::move(f));
  }
  out.space = std::make_shared<const GeneoSpace>(GeneoSpace::create(
      out.circle.pair, out.circle.pair, Homomorphism::identity(pair.group().size()), std::move(ops)));
  return out;
}

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::size_t order_of(const std::vector<PointIndex>& p) {
  std::size_t ord = 1;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = p[x]) seen[x] = 1, ++len;
    ord = std::lcm(ord, len);
  }
  return ord;
}

/// Grid values k/16 with |k/16| <= range.
std::vector<double> grid_values(double range) {
  std::vector<double> out;
  const auto k = static_cast<long>(std::floor(range * 16.0 + 1e-12));
  for (long i = -k; i <= k; ++i) out.push_back(static_cast<double>(i) * kGrid);
  return out;
}

std::vector<double> random_signal(Rng& rng, std::size_t n, const std::vector<double>& grid, bool injective) {
  std::vector<double> v(n);
  if (injective) {
    std::vector<double> pool = grid;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::copy_n(pool.begin(), n, v.begin());
  } else {
    for (double& x : v) x = grid[uniform(rng, 0, grid.size() - 1)];
  }
  return v;
}

std::vector<Signal> orbit_closure(const std::vector<std::vector<double>>& base,
                                  const std::vector<std::vector<PointIndex>>& gens) {
  std::set<std::vector<double>> seen;
  std::vector<std::vector<double>> queue;
  for (const auto& b : base) {
    if (seen.insert(b).second) queue.push_back(b);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<double> next(g.size());
      for (std::size_t x = 0; x < g.size(); ++x) next[x] = queue[head][g[x]];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Signal> out;
  for (auto& v : queue) out.push_back(Signal::of(std::move(v)));
  return out;
}

std::vector<PointIndex> cyclic_shift(std::size_t n, std::size_t k) {
  std::vector<PointIndex> f(n);
  for (std::size_t x = 0; x < n; ++x) f[x] = static_cast<PointIndex>((x + k) % n);
  return f;
}

double apply_lambda(int lambda, double x) {
  switch (lambda) {
    case 1: return x / 2.0;
    case 2: return std::max(x, 0.0);
    default: return x;
  }
}

std::size_t group_index_by_image0(const PerceptionPair& p, std::size_t k) {
  for (std::size_t e = 0; e < p.group().size(); ++e) {
    if (p.group()[e].forward[0] == k) return e;
  }
  fail(ErrorKind::InternalConsistency, "shift missing from generated group");
}

std::size_t find_signal(const PerceptionPair& p, const std::vector<double>& v) {
  const std::size_t k = p.phi().find(v);
  if (k == kNoMatch) fail(ErrorKind::InternalConsistency, "operator image missing from Ψ");
  return k;
}

std::shared_ptr<const GeneoSpace> precompose_space(Rng& rng) {
  const auto src = gen_random_finite(rng());
  const PerceptionPair& sp = *src;
  const std::size_t nops = uniform(rng, 1, 4);
  const int first_lambda = static_cast<int>(uniform(rng, 0, 1));
  std::vector<std::pair<std::size_t, int>> choice;
  for (std::size_t k = 0; k < nops; ++k) {
    const int lambda = k == 0 ? first_lambda : static_cast<int>(uniform(rng, 0, 2));
    choice.emplace_back(uniform(rng, 0, sp.group().size() - 1), lambda);
  }
  std::set<int> lambdas;
  for (const auto& c : choice) lambdas.insert(c.second);

  std::vector<Signal> psi;
  for (int lambda : lambdas) {
    for (const Signal& s : sp.phi().signals()) {
      std::vector<double> v(s.values);
      for (double& x : v) x = apply_lambda(lambda, x);
      psi.push_back(Signal::of(std::move(v)));
    }
  }
  std::vector<OperationMap> gens;
  for (std::size_t g : sp.generators()) gens.push_back(sp.group()[g]);
  auto dst = std::make_shared<const PerceptionPair>(PerceptionPair::create(std::move(psi), std::move(gens)));

  Homomorphism hom;
  for (const OperationMap& g : sp.group()) hom.table.push_back(*dst->index_of(g));
  std::vector<Geneo> ops;
  for (const auto& [s, lambda] : choice) {
    Geneo f;
    for (const Signal& phi : sp.phi().signals()) {
      std::vector<double> v(phi.size());
      for (std::size_t x = 0; x < v.size(); ++x) v[x] = apply_lambda(lambda, phi.values[sp.group()[s].forward[x]]);
      f.table.push_back(find_signal(*dst, v));
    }
    ops.push_back(std::move(f));
  }
  return std::make_shared<const GeneoSpace>(GeneoSpace::create(src, dst, std::move(hom), std::move(ops)));
}

struct FiberOp {
  int agg;  // 0 max, 1 min, 2 mean
  std::size_t shift;
  int lambda;
};

std::vector<double> fiber_apply(const FiberOp& op, const std::vector<double>& phi, std::size_t d) {
  const std::size_t m = phi.size();
  std::vector<double> agg(d);
  for (std::size_t y = 0; y < d; ++y) {
    double acc = op.agg == 0 ? -INFINITY : op.agg == 1 ? INFINITY : 0.0;
    for (std::size_t x = y; x < m; x += d) {
      if (op.agg == 0) acc = std::max(acc, phi[x]);
      else if (op.agg == 1) acc = std::min(acc, phi[x]);
      else acc += phi[x];
    }
    agg[y] = op.agg == 2 ? acc / static_cast<double>(m / d) : acc;
  }
  std::vector<double> out(d);
  for (std::size_t y = 0; y < d; ++y) out[y] = apply_lambda(op.lambda, agg[(y + op.shift) % d]);
  return out;
}

std::shared_ptr<const GeneoSpace> fiber_space(Rng& rng) {
  static constexpr std::size_t kSizes[] = {4, 6, 8, 9, 12};
  const std::vector<double> grid = grid_values(1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::size_t m = kSizes[uniform(rng, 0, std::size(kSizes) - 1)];
    std::vector<std::size_t> divisors;
    for (std::size_t d = 2; d < m; ++d) {
      if (m % d == 0) divisors.push_back(d);
    }
    const std::size_t d = divisors[uniform(rng, 0, divisors.size() - 1)];

    std::vector<std::vector<double>> base{random_signal(rng, m, grid, true)};
    if (uniform(rng, 0, 1) == 1) base.push_back(random_signal(rng, m, grid, false));
    auto src = std::make_shared<const PerceptionPair>(
        PerceptionPair::create(orbit_closure(base, {cyclic_shift(m, 1)}), {OperationMap::from_forward(cyclic_shift(m, 1), m)}));

    std::vector<FiberOp> fops;
    const std::size_t nops = uniform(rng, 1, 3);
    for (std::size_t k = 0; k < nops; ++k) {
      fops.push_back({static_cast<int>(uniform(rng, 0, 2)), uniform(rng, 0, d - 1), static_cast<int>(uniform(rng, 0, 2))});
    }
    std::vector<Signal> psi;
    for (const FiberOp& op : fops) {
      for (const Signal& phi : src->phi().signals()) psi.push_back(Signal::of(fiber_apply(op, phi.values, d)));
    }
    auto dst = std::make_shared<const PerceptionPair>(
        PerceptionPair::create(std::move(psi), {OperationMap::from_forward(cyclic_shift(d, 1), d)}));
    if (!separation_check(*dst).separated) continue;

    Homomorphism hom;
    for (const OperationMap& g : src->group()) hom.table.push_back(group_index_by_image0(*dst, g.forward[0] % d));
    std::vector<Geneo> ops;
    for (const FiberOp& op : fops) {
      Geneo f;
      for (const Signal& phi : src->phi().signals()) f.table.push_back(find_signal(*dst, fiber_apply(op, phi.values, d)));
      ops.push_back(std::move(f));
    }
    return std::make_shared<const GeneoSpace>(GeneoSpace::create(src, dst, std::move(hom), std::move(ops)));
  }
  fail(ErrorKind::InternalConsistency, "no separating fiber space found");
}

}  // namespace

std::shared_ptr<const PerceptionPair> gen_random_finite(std::uint64_t seed, const RandomPairOptions& opts) {
  const std::vector<double> grid = grid_values(opts.range);
  const std::size_t max_n = std::min(opts.max_points, grid.size());
  if (max_n < 2 || opts.max_signals < 1) fail(ErrorKind::Parameter, "random pair limits too small");
  Rng rng(seed);
  const std::size_t n = uniform(rng, 2, max_n);
  std::vector<PointIndex> sigma(n);
  do {
    std::iota(sigma.begin(), sigma.end(), PointIndex{0});
    std::shuffle(sigma.begin(), sigma.end(), rng);
  } while (order_of(sigma) > opts.max_signals);
  const std::size_t ord = order_of(sigma);
  const std::size_t bases = uniform(rng, 1, std::max<std::size_t>(1, std::min<std::size_t>(3, opts.max_signals / ord)));
  std::vector<std::vector<double>> base;
  for (std::size_t b = 0; b < bases; ++b) base.push_back(random_signal(rng, n, grid, b == 0));
  return std::make_shared<const PerceptionPair>(
      PerceptionPair::create(orbit_closure(base, {sigma}), {OperationMap::from_forward(sigma, n)}));
}

std::shared_ptr<const GeneoSpace> gen_random_space(std::uint64_t seed, RandomFamily family) {
  Rng rng(seed);
  return family == RandomFamily::Precompose ? precompose_space(rng) : fiber_space(rng);
}

std::shared_ptr<const GeneoSpace> gen_random_space(std::uint64_t seed) {
  return gen_random_space(seed, seed % 2 == 0 ? RandomFamily::Precompose : RandomFamily::Fiber);
}

}  // namespace geneo
