#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "geneo/completion.hpp"
#include "geneo/operators.hpp"

namespace geneo {

using PointAction = std::function<Descriptor(const Descriptor&)>;

/// A finite perception pair seen as a sample of a presented space: ranks
/// [0, pair->points()) of the presentation are the pair's points in order,
/// and `act(g, x)` moves any descriptor by group element g.
struct PresentedPair {
  std::shared_ptr<const PerceptionPair> pair;
  DensePresentation presentation;
  std::function<Descriptor(std::size_t g, const Descriptor&)> act;
  bool exact = false;  // the presentation is the finite pair itself
};

/// The pair as its own completion (finite spaces are complete).
PresentedPair exact_presented(std::shared_ptr<const PerceptionPair> pair);

/// Nearest net point to an arbitrary descriptor, using pivot lower bounds
/// from the triangle inequality. Ties go to the lowest net index.
class NetLocator {
 public:
  NetLocator() = default;
  NetLocator(const CompletionApprox& net, std::function<double(const Descriptor&, const Descriptor&)> dist,
             std::size_t pivots = 8);
  Cover nearest(const Descriptor& q) const;

 private:
  std::vector<Descriptor> points_;
  std::function<double(const Descriptor&, const Descriptor&)> dist_;
  std::vector<std::size_t> pivots_;
  std::vector<double> pivot_rows_;
};

/// X̂ at resolution eps plus the inclusion j of the sample.
struct CompletionPair {
  CompletionApprox xhat;
  DensePresentation presentation;
  std::vector<std::size_t> j;               // sample point -> net index
  std::vector<std::size_t> nearest_sample;  // net index -> closest sample point
  std::vector<double> sample_gap;           // net index -> distance to that sample point
  double embedding_residual = 0.0;          // max |D̂(jx, jy) − D_X(x, y)|
  double density_gap = 0.0;                 // max sample_gap
  std::vector<std::vector<PointIndex>> by_distance;  // per net point, all net points sorted by distance
  std::shared_ptr<const NetLocator> locator;

  std::size_t size() const { return xhat.points.size(); }
  const DistanceMatrix& metric() const { return xhat.space; }
};

CompletionPair make_completion_pair(const PresentedPair& p, double eps, const CompletionOptions& opts = {});

/// φ̂ sampled on the net.
struct ExtendedSignal {
  std::vector<double> values;
  double eps = 0.0;
  std::size_t origin = 0;  // index of φ in its signal space
};

/// Value at a net point is φ at the closest sample point. Throws Unsaturated
/// for an unsaturated completion unless `force` is set.
ExtendedSignal extend_signal(const Signal& phi, std::size_t origin, const CompletionPair& comp, bool force = false);
std::vector<ExtendedSignal> extend_signals(const SignalSpace& phi, const CompletionPair& comp, bool force = false);

/// ĝ as a net map. `act` keeps the exact descriptor action so distances can
/// also be evaluated without snapping.
struct InducedOperation {
  std::vector<PointIndex> forward;
  double snap = 0.0;   // worst snapping distance
  double drift = 0.0;  // bound on D̂(net image, exact image), summed over compositions
  bool bijective = false;
  PointAction act;
};

/// Transports every net point through `act` and snaps to the nearest net
/// point. Throws Resolution if some snap is farther than delta.
InducedOperation induce_action(PointAction act, const CompletionPair& comp, double delta);
InducedOperation induce_operation(const PresentedPair& p, std::size_t g, const CompletionPair& comp, double delta);
InducedOperation identity_operation(const CompletionPair& comp);

/// (a ∘ b) as net maps and as exact actions.
InducedOperation compose(const InducedOperation& a, const InducedOperation& b);

/// d̂_inf on the net: max_p D̂(f(p), g(p)). Stops early once above `stop`.
double net_uniform_distance(const CompletionPair& comp, const InducedOperation& f, const InducedOperation& g,
                            double stop = std::numeric_limits<double>::infinity());
/// max over net points of the oracle distance between the exact images.
double exact_uniform_distance(const CompletionPair& comp, const PointAction& f, const PointAction& g);

/// Greedy sup-norm eps-net of a finite family of extended signals.
struct ClosedSignalSpace {
  EpsNet net;                            // over the input list
  std::vector<ExtendedSignal> members;   // the net signals
  std::vector<std::size_t> source_index; // member -> input index
  double eps = 0.0;

  /// Nearest member in sup norm.
  NearestSignal nearest(std::span<const double> values) const;
};

ClosedSignalSpace closure_signals(std::span<const ExtendedSignal> signals, double eps);

/// Distance between listed group elements as used for closure dedup: the
/// net-map d̂_inf, refined by the exact actions when the net maps alone are
/// inconclusive (snapping can separate net maps of nearby isometries).
double closure_distance(const CompletionPair& comp, const InducedOperation& f, const InducedOperation& g);

/// Breadth-first product saturation of net maps with eps-dedup in d̂_inf.
struct ClosedGroup {
  std::vector<InducedOperation> elements;  // elements[0] is the identity
  std::vector<std::size_t> parent;         // BFS parent (npos for the identity)
  std::vector<std::size_t> via;            // generator applied to the parent
  std::size_t generator_count = 0;
  bool saturated = false;
  double eps = 0.0;
};

/// Index over a growing list of net maps, bucketed by the image of net
/// point 0; the first coordinate of d̂_inf is a lower bound for pruning.
class GroupLocator {
 public:
  explicit GroupLocator(const CompletionPair& comp) : comp_(&comp), buckets_(comp.size()) {}
  void add(const InducedOperation& op, std::size_t index);
  /// Nearest listed element (lowest index on ties).
  Cover nearest(const InducedOperation& f, const std::vector<InducedOperation>& elements) const;
  /// Every listed element within r of f.
  std::vector<std::size_t> within(const InducedOperation& f, const std::vector<InducedOperation>& elements,
                                  double r) const;
  /// Nearest listed element under closure_distance, searched within eps of
  /// the net-map ball widened by the drift of both maps.
  Cover nearest_closure(const InducedOperation& f, const std::vector<InducedOperation>& elements, double eps) const;

 private:
  const CompletionPair* comp_;
  std::vector<std::vector<std::size_t>> buckets_;
  double max_drift_ = 0.0;
};

/// Stops when no product of a listed element with a generator lands farther
/// than eps from every listed element, or when `cap` elements are listed
/// (saturated = false).
ClosedGroup closure_group(std::span<const InducedOperation> gens, const CompletionPair& comp, double eps,
                          std::size_t cap = 100000);

/// F̂ on Φ̂: indices follow Φ and Ψ, so the table is F's own.
struct InducedGeneo {
  std::vector<std::size_t> table;
};

InducedGeneo induce_geneo(const Geneo& f, std::span<const ExtendedSignal> phihat,
                          std::span<const ExtendedSignal> psihat);

/// F̄̂: every known member of the closed source space (all of Φ̂, which
/// contains the net) mapped through F̂ and snapped into the closed target.
struct ExtendedGeneo {
  std::vector<std::size_t> on_phihat;  // Φ̂ index -> closed target member
  std::vector<std::size_t> on_net;     // closed source member -> closed target member
  double snap = 0.0;
};

/// Throws Resolution when a snap exceeds the target net radius.
ExtendedGeneo extend_geneo(const InducedGeneo& fhat, std::span<const ExtendedSignal> psihat,
                           const ClosedSignalSpace& closed_src, const ClosedSignalSpace& closed_dst);

/// F̄̂ at an arbitrary net signal: nearest Φ̂ member, then the table.
std::size_t apply_extended(const ExtendedGeneo& fbar, std::span<const double> values,
                           std::span<const ExtendedSignal> phihat);

/// T̄̂ on the closed source group.
struct ExtendedHom {
  std::vector<std::size_t> table;        // closed source element -> closed target element
  std::vector<std::size_t> via_induced;  // closed source element -> nearest induced ĝ (index in G)
};

/// Throws Precondition (naming the uncovered Ψ members) unless the space is
/// collectionwise surjective.
ExtendedHom extend_homomorphism(std::span<const InducedOperation> src_induced, const ClosedGroup& src_closed,
                                std::span<const InducedOperation> dst_induced, const ClosedGroup& dst_closed,
                                const CompletionPair& src_comp, const CompletionPair& dst_comp,
                                const GeneoSpace& space);

struct Condition {
  std::string name;
  double residual = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct NetSizes {
  std::size_t phi_bar = 0;
  std::size_t g_bar = 0;
  std::size_t f_bar = 0;
  std::size_t psi_bar = 0;
  std::size_t h_bar = 0;
};

struct CompactificationReport {
  double eps = 0.0;
  std::vector<Condition> conditions;
  NetSizes net_sizes;
  bool saturated = false;
  std::vector<double> schedule;
  std::vector<std::size_t> phi_profile, g_profile, f_profile;

  bool all_pass() const;
  const Condition* find(const std::string& name) const;
};

struct CompactifyOptions {
  CompletionOptions completion;
  std::size_t group_cap = 100000;
  double snap_delta = 0.0;  // 0 means eps
  bool force_unsaturated = false;
};

struct SideArtifacts {
  CompletionPair comp;
  std::vector<ExtendedSignal> extended;
  std::vector<InducedOperation> induced;  // indexed like pair.group()
  ClosedSignalSpace closed_signals;
  ClosedGroup closed_group;
};

struct Compactification {
  SideArtifacts source;
  SideArtifacts target;
  std::vector<InducedGeneo> induced_operators;
  std::vector<ExtendedGeneo> operators;
  ExtendedHom hom;
  CompactificationReport report;
};

/// Runs the whole pipeline on both pairs and evaluates every isometry and
/// commutativity condition. Throws Precondition when a pair does not separate
/// points or the space is not collectionwise surjective.
Compactification compactify(const PresentedPair& src, const PresentedPair& dst, const GeneoSpace& space, double eps,
                            const CompactifyOptions& opts = {});

CompactificationReport verify_compactification(const PresentedPair& src, const PresentedPair& dst,
                                               const GeneoSpace& space, double eps,
                                               const CompactifyOptions& opts = {});
/// Exact finite inputs: both pairs are their own completions.
CompactificationReport verify_compactification(const GeneoSpace& space, double eps,
                                               const CompactifyOptions& opts = {});

}  // namespace geneo
