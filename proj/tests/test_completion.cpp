#include <gtest/gtest.h>

#include <random>

#include "geneo/completion.hpp"
#include "geneo/error.hpp"
#include "geneo/scenarios.hpp"
#include "oracles.hpp"

using namespace geneo;

namespace {

DistanceMatrix line(const std::vector<double>& xs) {
  DistanceMatrix d(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) d.at(i, j) = std::abs(xs[i] - xs[j]);
  return d;
}

double turns(const Descriptor& d) { return d.at(0).to_double(); }

}  // namespace

TEST(CompletionNet, FiniteSpaceIsItsOwnCompletion) {
  const DistanceMatrix d = line({0, 0.3, 0.7, 1});
  const CompletionApprox c = completion_net(finite_presentation(d), 0.1);
  EXPECT_TRUE(c.saturated);
  ASSERT_EQ(c.points.size(), 4u);
  EXPECT_EQ(c.sample_embedding, (std::vector<std::size_t>{0, 1, 2, 3}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(c.space(i, j), d(i, j));
}

TEST(CompletionNet, SampleKeptEvenWhenCloserThanEps) {
  DensePresentation p = finite_presentation(line({0, 0.01, 0.02, 0.5}));
  p.sample_size = 3;
  const CompletionApprox c = completion_net(p, 0.2);
  EXPECT_EQ(c.sample_embedding.size(), 3u);
  EXPECT_EQ(c.points.size(), 4u);
}

TEST(CompletionNet, CircleCoverage) {
  const DensePresentation p = circle_presentation(8);
  const CompletionApprox c = completion_net(p, 0.2);
  ASSERT_TRUE(c.saturated);
  ASSERT_GE(c.points.size(), 8u);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(turns(c.points[c.sample_embedding[k]]), k / 8.0);

  // every angle on a fine grid sits within eps of some net point
  for (int k = 0; k < 1000; ++k) {
    const double a = k / 1000.0;
    double best = 1e9;
    for (const Descriptor& q : c.points) best = std::min(best, oracle::circle_metric(a, turns(q)));
    EXPECT_LE(best, 0.2 + 1e-3) << a;
  }
  for (std::size_t i = 0; i < c.points.size(); ++i)
    for (std::size_t j = 0; j < c.points.size(); ++j)
      EXPECT_NEAR(c.space(i, j), oracle::circle_metric(turns(c.points[i]), turns(c.points[j])), 1e-12);
}

TEST(CompletionNet, CoverageCertificates) {
  const DensePresentation p = circle_presentation(4);
  const CompletionApprox c = completion_net(p, 0.15);
  EXPECT_EQ(c.coverage.size(), c.explored);
  for (std::size_t r = 0; r < c.explored; ++r) {
    const Descriptor d = *p.enumerate(r);
    EXPECT_LE(c.coverage[r].distance, 0.15);
    EXPECT_EQ(c.coverage[r].distance, p.dist(d, c.points[c.coverage[r].center]));
  }
}

TEST(CompletionNet, BudgetExhaustionIsUnsaturated) {
  CompletionOptions opts;
  opts.budget = 20;
  const CompletionApprox c = completion_net(circle_presentation(8), 0.01, opts);
  EXPECT_FALSE(c.saturated);
}

TEST(CompletionNet, RejectsBadEps) {
  EXPECT_THROW(completion_net(circle_presentation(8), 0.0), Error);
}

TEST(TbProfilePresented, MonotoneAndFinite) {
  const std::vector<double> schedule{1.0, 0.5, 0.25, 0.1, 0.05};
  const auto prof = tb_profile(circle_presentation(8), schedule);
  ASSERT_EQ(prof.size(), schedule.size());
  for (std::size_t k = 1; k < prof.size(); ++k) EXPECT_GT(prof[k], prof[k - 1]);
  EXPECT_EQ(prof.front(), 1u);
  // a circle of perimeter 2π in a metric capped at 1 needs at least 2π/(2eps) points
  EXPECT_GE(prof.back(), static_cast<std::size_t>(2 * std::numbers::pi / 0.1));
}

TEST(TbProfilePresented, FiniteMatchesMatrixProfile) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> xs(30);
  for (double& x : xs) x = u(rng);
  const DistanceMatrix d = line(xs);
  const std::vector<double> schedule{0.5, 0.2, 0.05, 0.01};
  EXPECT_EQ(tb_profile(finite_presentation(d), schedule), tb_profile(d, schedule));
}
