#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace geneo {

inline constexpr double kDefaultTolerance = 1e-9;

/// Dense distance table, row-major. Construction checks shape and finiteness
/// only; see validate_pseudo_metric for the axioms.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n, double fill = 0.0) : n_(n), d_(n * n, fill) {}

  /// Throws MalformedInput for ragged rows or non-finite entries.
  static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  double& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {d_.data() + i * n_, n_}; }
  std::span<double> row(std::size_t i) { return {d_.data() + i * n_, n_}; }

  double diameter() const;
  std::vector<std::vector<double>> to_rows() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

struct Violation {
  enum class Kind { Negative, Diagonal, Symmetry, Triangle };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;  // only meaningful for Triangle: d(i,k) > d(i,j) + d(j,k)
  double excess = 0.0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Empty iff every axiom holds within tol. Symmetry is reported once per
/// unordered pair (i < j); triangle violations once per ordered triple.
std::vector<Violation> validate_pseudo_metric(const DistanceMatrix& d, double tol = kDefaultTolerance);

struct Quotient {
  DistanceMatrix metric;
  std::vector<std::size_t> projection;  // old index -> class index
  std::vector<std::size_t> representative;  // class index -> lowest member
};

/// Merges every pair at distance <= tol (transitively); class order follows
/// the lowest member index.
Quotient metric_quotient(const DistanceMatrix& d, double tol = kDefaultTolerance);

struct Cover {
  std::size_t center = 0;  // point index of the covering center
  double distance = 0.0;
  friend bool operator==(const Cover&, const Cover&) = default;
};

struct EpsNet {
  double eps = 0.0;
  std::vector<std::size_t> centers;  // point indices, in selection order
  std::vector<Cover> coverage;       // one certificate per point
};

/// Fills `out` with the distances from point `i` to every point.
using RowFn = std::function<void(std::size_t i, std::span<double> out)>;

/// Greedy farthest-point net: the first center is point 0, each further
/// center is the point farthest from the current centers (ties to the lowest
/// index) until every point is within eps.
EpsNet greedy_eps_net(const DistanceMatrix& d, double eps);
EpsNet greedy_eps_net(std::size_t n, const RowFn& row, double eps);

/// Full farthest-point traversal. prefix_radius[k] is the covering radius of
/// the first k+1 centers, so the eps-net is the shortest prefix whose radius
/// is <= eps.
struct FarthestPointOrder {
  std::vector<std::size_t> order;
  std::vector<double> prefix_radius;

  std::size_t net_size(double eps) const;
};

/// Stops early once the covering radius is <= stop_radius.
FarthestPointOrder farthest_point_order(std::size_t n, const RowFn& row, double stop_radius = 0.0);

/// Directed sup-inf distances combined by max. Throws Parameter on empty sets.
double hausdorff_distance(std::span<const std::size_t> a, std::span<const std::size_t> b, const DistanceMatrix& d);
double hausdorff_distance(std::size_t na, std::size_t nb,
                          const std::function<double(std::size_t, std::size_t)>& dist);

/// Net sizes along a strictly decreasing schedule of positive radii.
std::vector<std::size_t> tb_profile(const DistanceMatrix& d, std::span<const double> eps_schedule);

/// Throws Parameter unless the schedule is nonempty, positive and decreasing.
void check_schedule(std::span<const double> eps_schedule);

}  // namespace geneo
