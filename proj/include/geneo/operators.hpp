#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "geneo/perception.hpp"

namespace geneo {

/// Group homomorphism between the groups of two perception pairs, as a table
/// of group indices (source element -> target element).
struct Homomorphism {
  std::vector<std::size_t> table;

  static Homomorphism identity(std::size_t order);
};

struct HomomorphismCheck {
  double identity_residual = 0.0;  // d_inf(T(id), id)
  double product_residual = 0.0;   // max d_inf(T(ab), T(a)T(b))
  bool valid(double tol) const { return identity_residual <= tol && product_residual <= tol; }
};

HomomorphismCheck validate_homomorphism(const Homomorphism& hom, const PerceptionPair& src, const PerceptionPair& dst);

/// An operator Φ -> Ψ given extensionally: table[i] is the Ψ index of F(φ_i).
struct Geneo {
  std::vector<std::size_t> table;
  friend bool operator==(const Geneo&, const Geneo&) = default;
};

struct GeneoCheck {
  double equiv_residual = 0.0;  // max ‖F(φ∘g) − F(φ)∘T(g)‖
  double exp_residual = 0.0;    // max (‖Fφ1 − Fφ2‖ − ‖φ1 − φ2‖)⁺
  bool valid(double tol) const { return equiv_residual <= tol && exp_residual <= tol; }
};

/// Throws MalformedOperator if the table is not total on Φ or leaves Ψ.
GeneoCheck validate_geneo(const Geneo& f, const PerceptionPair& src, const PerceptionPair& dst,
                          const Homomorphism& hom);

/// A finite set of GENEOs sharing one homomorphism. Immutable once built.
class GeneoSpace {
 public:
  /// Throws Precondition when T is not a homomorphism or an operator fails
  /// validate_geneo; MalformedOperator on bad tables.
  static GeneoSpace create(std::shared_ptr<const PerceptionPair> source, std::shared_ptr<const PerceptionPair> target,
                           Homomorphism hom, std::vector<Geneo> operators);

  const PerceptionPair& source() const { return *source_; }
  const PerceptionPair& target() const { return *target_; }
  std::shared_ptr<const PerceptionPair> source_ptr() const { return source_; }
  std::shared_ptr<const PerceptionPair> target_ptr() const { return target_; }
  const Homomorphism& hom() const { return hom_; }
  const std::vector<Geneo>& operators() const { return operators_; }

 private:
  std::shared_ptr<const PerceptionPair> source_;
  std::shared_ptr<const PerceptionPair> target_;
  Homomorphism hom_;
  std::vector<Geneo> operators_;
};

/// D_GENEO: sup_φ ‖F1(φ) − F2(φ)‖.
double geneo_distance(const Geneo& a, const Geneo& b, const PerceptionPair& dst);
/// D_GENEO,H: sup_φ d_H(F1(φ), F2(φ)).
double geneo_distance_natural(const Geneo& a, const Geneo& b, const PerceptionPair& dst);

/// D_F,Φ: sup over the space of ‖F(a) − F(b)‖, for members a, b of Φ.
double signal_distance_via_geneos(const GeneoSpace& space, std::size_t a, std::size_t b);
/// Throws Membership if a signal is not in the source Φ.
double signal_distance_via_geneos(const GeneoSpace& space, const Signal& a, const Signal& b);

struct SurjectivityResult {
  bool covered = true;
  std::vector<std::size_t> uncovered;  // Ψ indices hit by no operator
};

SurjectivityResult collectionwise_surjective(const GeneoSpace& space);

struct HomNonexpansiveResult {
  double max_violation = 0.0;  // max over (a,b) of D_Aut(Ta,Tb) − D_Aut(a,b)
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  bool precondition_met = false;  // collectionwise surjectivity
};

HomNonexpansiveResult check_hom_nonexpansive(const GeneoSpace& space);

struct GeneoEnumeration {
  std::vector<Geneo> operators;  // lexicographic on table
  bool complete = true;
  std::size_t tables = 0;
};

/// Exhaustive search over all |Ψ|^|Φ| tables, capped at `cap` tables.
GeneoEnumeration enumerate_geneos(const PerceptionPair& src, const PerceptionPair& dst, const Homomorphism& hom,
                                  std::size_t cap = 10000);

}  // namespace geneo
