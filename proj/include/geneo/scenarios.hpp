#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "geneo/compactify.hpp"
#include "geneo/operators.hpp"
#include "geneo/rational.hpp"

namespace geneo {

/// Rotations acting on a grid of m points of the circle R/Z, with one tent
/// per grid point, φ_c(x) = max(0, 1 − 2π·|x − c|) (circular distance).
struct CircleScenario {
  std::size_t m = 0;
  std::vector<std::int64_t> denoms;
  std::shared_ptr<const PerceptionPair> pair;
  PresentedPair presented;          // grid first, then dyadics level by level
  std::vector<Rational> rotation;   // group index -> angle in turns
};

/// Throws Parameter unless m >= 4 and every denominator divides m.
CircleScenario gen_circle(std::size_t m, std::span<const std::int64_t> denoms);

/// min(2π·circular distance, 1) between two angles in turns.
double circle_distance(const Rational& a, const Rational& b);

/// Dense presentation of the whole circle with the given grid as its sample.
DensePresentation circle_presentation(std::size_t m);

/// Rotation by `angle` turns on circle descriptors.
PointAction circle_rotation(Rational angle);

/// Presents an existing grid pair (loaded from JSON, say) as a sample of the
/// circle. Throws Parameter unless every group element is a grid rotation.
PresentedPair circle_presented(std::shared_ptr<const PerceptionPair> pair, std::size_t m);

/// Circle scenario plus rotation-precomposition operators φ ↦ φ∘ρ_s (T = id),
/// one per listed shift in grid steps.
struct CircleSpace {
  CircleScenario circle;
  std::shared_ptr<const GeneoSpace> space;
};

CircleSpace gen_circle_space(std::size_t m, std::span<const std::int64_t> denoms,
                             std::span<const std::size_t> shifts = {});

struct RandomPairOptions {
  std::size_t max_points = 16;
  std::size_t max_signals = 32;
  double range = 1.0;  // values are multiples of 1/16 in [-range, range]
};

/// A random finite pair: a cyclic group generated by a random permutation and
/// Φ the orbit-closure of a few grid-valued base signals, the first injective.
std::shared_ptr<const PerceptionPair> gen_random_finite(std::uint64_t seed, const RandomPairOptions& opts = {});

enum class RandomFamily { Precompose, Fiber };

/// Random GENEO space with a known valid construction. Precompose: F(φ) =
/// λ∘φ∘s, T = id. Fiber: X = Z_m, Y = Z_d with d | m, T(k) = k mod d, and F
/// aggregates each fiber {x ≡ y mod d} by max, min or mean. λ is one of id,
/// x/2 and max(x, 0); Ψ is the union of the operator images.
std::shared_ptr<const GeneoSpace> gen_random_space(std::uint64_t seed, RandomFamily family);
std::shared_ptr<const GeneoSpace> gen_random_space(std::uint64_t seed);

}  // namespace geneo
