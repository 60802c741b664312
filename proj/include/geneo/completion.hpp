#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "geneo/metric.hpp"
#include "geneo/rational.hpp"

namespace geneo {

/// Exact point descriptor of a presented space (e.g. one angle in turns).
using Descriptor = std::vector<Rational>;

/// A countable dense subset of a totally bounded space, given by an
/// enumerator and an exact-input distance oracle. Ranks [0, sample_size) are
/// the points of the finite sample the completion must contain isometrically.
struct DensePresentation {
  /// nullopt once the enumeration is exhausted (finite presentations).
  std::function<std::optional<Descriptor>(std::size_t rank)> enumerate;
  std::function<double(const Descriptor&, const Descriptor&)> dist;
  std::size_t sample_size = 0;
  bool claimed_totally_bounded = true;
};

/// Presentation of a finite space given by its distance table; descriptors
/// are the point indices.
DensePresentation finite_presentation(const DistanceMatrix& d);

struct CompletionOptions {
  std::size_t budget = 1u << 16;   // max enumerated ranks
  std::size_t window = 256;        // consecutive non-improving ranks for saturation
};

/// A finite eps-net standing in for the metric completion.
struct CompletionApprox {
  DistanceMatrix space;                   // oracle distances between net points
  std::vector<Descriptor> points;         // net point descriptors
  std::vector<std::size_t> sample_embedding;  // sample rank -> net index
  std::vector<Cover> coverage;            // per explored rank: nearest net point
  double eps = 0.0;
  std::size_t explored = 0;
  bool saturated = false;
};

/// Enumerates the presentation, keeps every sample point, and adds any later
/// point farther than eps from the current net. Saturates when `window`
/// consecutive ranks add nothing or the enumeration ends; an exhausted budget
/// returns saturated = false.
CompletionApprox completion_net(const DensePresentation& p, double eps, const CompletionOptions& opts = {});

/// Net sizes of the presented space along a decreasing schedule. The
/// candidate pool is everything explored at the finest radius; sizes come
/// from one farthest-point traversal of that pool, so they never decrease.
std::vector<std::size_t> tb_profile(const DensePresentation& p, std::span<const double> eps_schedule,
                                    const CompletionOptions& opts = {});

}  // namespace geneo
