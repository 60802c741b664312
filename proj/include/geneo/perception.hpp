#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "geneo/kernels.hpp"
#include "geneo/metric.hpp"

namespace geneo {

inline constexpr std::size_t kNoMatch = std::numeric_limits<std::size_t>::max();

/// A bounded real-valued function on the points of a finite domain.
struct Signal {
  std::vector<double> values;
  double bound = 0.0;

  /// Bound taken as the sup norm of the values.
  static Signal of(std::vector<double> values);
  std::size_t size() const { return values.size(); }
};

/// sup_i |a_i - b_i|. Throws Shape on a size mismatch.
double signal_distance(const Signal& a, const Signal& b);
double signal_distance(std::span<const double> a, std::span<const double> b);

struct NearestSignal {
  std::size_t index = kNoMatch;
  double distance = std::numeric_limits<double>::infinity();
};

/// Deduplicated finite set of signals over one domain.
class SignalSpace {
 public:
  SignalSpace() = default;

  /// Drops any signal within tol of an earlier one. dedup_map() records
  /// where every input signal ended up. Throws Shape on mixed domain sizes
  /// and MalformedInput on non-finite values.
  static SignalSpace build(std::vector<Signal> signals, double tol = kDefaultTolerance);

  std::size_t size() const { return signals_.size(); }
  std::size_t domain_size() const { return domain_size_; }
  double tolerance() const { return tol_; }
  const Signal& operator[](std::size_t i) const { return signals_[i]; }
  const std::vector<Signal>& signals() const { return signals_; }
  const std::vector<std::size_t>& dedup_map() const { return dedup_map_; }

  NearestSignal nearest(std::span<const double> values) const;
  /// Nearest member to the composite values[perm[x]], without materializing it.
  NearestSignal nearest_composite(std::span<const double> values, std::span<const PointIndex> perm) const;
  /// Index of the member within tol of `values`, or kNoMatch.
  std::size_t find(std::span<const double> values) const;

 private:
  std::vector<Signal> signals_;
  std::vector<std::size_t> dedup_map_;
  std::size_t domain_size_ = 0;
  double tol_ = kDefaultTolerance;
};

/// A self-map of the domain as an explicit index table.
struct OperationMap {
  std::vector<PointIndex> forward;
  std::optional<std::vector<PointIndex>> inverse;

  /// Fills `inverse` when `forward` is a bijection. Throws MalformedOperation
  /// when an entry is out of range for a domain of size n.
  static OperationMap from_forward(std::vector<PointIndex> forward, std::size_t n);
  static OperationMap identity(std::size_t n);

  std::size_t size() const { return forward.size(); }
  bool is_bijective() const { return inverse.has_value(); }
  OperationMap inverted() const;

  friend bool operator==(const OperationMap& a, const OperationMap& b) { return a.forward == b.forward; }
};

/// (a ∘ b)(x) = a(b(x)).
OperationMap compose(const OperationMap& a, const OperationMap& b);

/// sup_x D(f(x), g(x)).
double uniform_distance(const DistanceMatrix& d, const OperationMap& f, const OperationMap& g);

/// D_X(i,j) = max over signals of |φ(i) − φ(j)|. Throws Parameter on an
/// empty space.
DistanceMatrix induce_point_metric(const SignalSpace& phi);

struct OperationCheck {
  bool is_phi_op = false;
  bool is_invertible = false;
  std::vector<std::size_t> match;          // φ index -> index of φ∘g in Φ (kNoMatch if none)
  std::vector<std::size_t> inverse_match;  // same for g⁻¹; empty when not bijective
  double residual = 0.0;                   // worst nearest-member distance
};

/// Throws MalformedOperation when g is not total on the domain.
OperationCheck validate_operation(const SignalSpace& phi, const OperationMap& g);

/// A signal space together with a finite group of invertible Φ-operations,
/// closed under composition, with identity at index 0.
class PerceptionPair {
 public:
  /// Builds Φ (deduplicated), induces D_X, validates every generator and
  /// saturates the generated group. Throws Precondition when a generator is
  /// not an invertible Φ-operation, Parameter if the group exceeds max_group.
  static PerceptionPair create(std::vector<Signal> signals, std::vector<OperationMap> generators,
                               double tol = kDefaultTolerance, std::size_t max_group = 100000);

  std::size_t points() const { return domain_.size(); }
  double tolerance() const { return phi_.tolerance(); }
  const DistanceMatrix& domain() const { return domain_; }
  const SignalSpace& phi() const { return phi_; }
  const std::vector<OperationMap>& group() const { return group_; }
  const std::vector<std::size_t>& generators() const { return generators_; }

  std::size_t compose_index(std::size_t a, std::size_t b) const { return cayley_[a * group_.size() + b]; }
  std::size_t inverse_index(std::size_t a) const { return inverse_[a]; }
  /// Index of φ∘g in Φ.
  std::size_t act(std::size_t g, std::size_t phi) const { return action_[g * phi_.size() + phi]; }
  std::optional<std::size_t> index_of(const OperationMap& g) const;

 private:
  DistanceMatrix domain_;
  SignalSpace phi_;
  std::vector<OperationMap> group_;
  std::vector<std::size_t> generators_;  // group indices of the supplied generators
  std::vector<std::size_t> cayley_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> action_;
};

struct AutomorphismSearch {
  std::vector<OperationMap> maps;  // lexicographic on forward
  bool complete = true;            // false when the cap stopped the search
  std::size_t candidates = 0;      // isometric permutations tested against Φ
};

/// Aut_Φ(X) by depth-first search over permutations, pruned by D_X-isometry
/// before any signal matching. `cap` bounds the candidates tested.
AutomorphismSearch enumerate_automorphisms(const SignalSpace& phi, const DistanceMatrix& domain,
                                           std::size_t cap = 1000000);
AutomorphismSearch enumerate_automorphisms(const PerceptionPair& pair, std::size_t cap = 1000000);

/// sup_φ ‖φ∘g − φ∘h‖, cross-checked against sup_x D_X(g x, h x). Throws
/// InternalConsistency if the two evaluation orders disagree beyond tol.
double aut_distance(const PerceptionPair& pair, const OperationMap& g, const OperationMap& h);
double aut_distance(const PerceptionPair& pair, std::size_t g, std::size_t h);

/// min over the listed elements of ‖a − b∘g‖. Throws Parameter on an empty
/// list and Shape on mismatched sizes.
double natural_pseudo_distance(std::span<const OperationMap> group, std::span<const double> a,
                               std::span<const double> b);
double natural_pseudo_distance(const PerceptionPair& pair, const Signal& a, const Signal& b);

struct SeparationResult {
  bool separated = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

SeparationResult separation_check(const DistanceMatrix& d, double tol = kDefaultTolerance);
SeparationResult separation_check(const PerceptionPair& pair);

}  // namespace geneo
