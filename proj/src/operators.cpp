#include "geneo/operators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "geneo/error.hpp"

namespace geneo {

Homomorphism Homomorphism::identity(std::size_t order) {
  Homomorphism h;
  h.table.resize(order);
  std::iota(h.table.begin(), h.table.end(), std::size_t{0});
  return h;
}

namespace {

void check_hom_shape(const Homomorphism& hom, const PerceptionPair& src, const PerceptionPair& dst) {
  if (hom.table.size() != src.group().size()) {
    fail(ErrorKind::MalformedOperator, "homomorphism table covers " + std::to_string(hom.table.size()) +
                                           " elements, source group has " + std::to_string(src.group().size()));
  }
  for (std::size_t t : hom.table) {
    if (t >= dst.group().size()) fail(ErrorKind::MalformedOperator, "homomorphism maps outside the target group");
  }
}

void check_table(const Geneo& f, const PerceptionPair& src, const PerceptionPair& dst) {
  if (f.table.size() != src.phi().size()) {
    fail(ErrorKind::MalformedOperator, "operator table covers " + std::to_string(f.table.size()) +
                                           " signals, Φ has " + std::to_string(src.phi().size()));
  }
  for (std::size_t t : f.table) {
    if (t >= dst.phi().size()) fail(ErrorKind::MalformedOperator, "operator maps outside Ψ");
  }
}

}  // namespace

HomomorphismCheck validate_homomorphism(const Homomorphism& hom, const PerceptionPair& src, const PerceptionPair& dst) {
  check_hom_shape(hom, src, dst);
  HomomorphismCheck out;
  const auto& H = dst.group();
  out.identity_residual = uniform_distance(dst.domain(), H[hom.table[0]], H[0]);
  const std::size_t m = src.group().size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t lhs = hom.table[src.compose_index(a, b)];
      const std::size_t rhs = dst.compose_index(hom.table[a], hom.table[b]);
      if (lhs != rhs) {
        out.product_residual = std::max(out.product_residual, uniform_distance(dst.domain(), H[lhs], H[rhs]));
      }
    }
  }
  return out;
}

GeneoCheck validate_geneo(const Geneo& f, const PerceptionPair& src, const PerceptionPair& dst,
                          const Homomorphism& hom) {
  check_table(f, src, dst);
  check_hom_shape(hom, src, dst);
  GeneoCheck out;
  const SignalSpace& phi = src.phi();
  const SignalSpace& psi = dst.phi();
  for (std::size_t g = 0; g < src.group().size(); ++g) {
    const auto& tg = dst.group()[hom.table[g]].forward;
    for (std::size_t k = 0; k < phi.size(); ++k) {
      const auto& lhs = psi[f.table[src.act(g, k)]].values;  // F(φ∘g)
      const auto& img = psi[f.table[k]].values;             // F(φ), composed with T(g) below
      out.equiv_residual = std::max(out.equiv_residual, kernels::sup_abs_diff_gather(lhs, img, tg));
    }
  }
  for (std::size_t a = 0; a < phi.size(); ++a) {
    for (std::size_t b = a + 1; b < phi.size(); ++b) {
      const double grow = signal_distance(psi[f.table[a]], psi[f.table[b]]) - signal_distance(phi[a], phi[b]);
      out.exp_residual = std::max(out.exp_residual, grow);
    }
  }
  return out;
}

GeneoSpace GeneoSpace::create(std::shared_ptr<const PerceptionPair> source, std::shared_ptr<const PerceptionPair> target,
                              Homomorphism hom, std::vector<Geneo> operators) {
  if (!source || !target) fail(ErrorKind::Parameter, "GENEO space needs both perception pairs");
  const double tol = std::max(source->tolerance(), target->tolerance());
  const HomomorphismCheck hc = validate_homomorphism(hom, *source, *target);
  if (!hc.valid(tol)) {
    fail(ErrorKind::Precondition, "T is not a group homomorphism (residual " +
                                      std::to_string(std::max(hc.identity_residual, hc.product_residual)) + ")");
  }
  for (std::size_t k = 0; k < operators.size(); ++k) {
    const GeneoCheck gc = validate_geneo(operators[k], *source, *target, hom);
    if (!gc.valid(tol)) {
      fail(ErrorKind::Precondition, "operator " + std::to_string(k) + " is not a GENEO (equivariance " +
                                        std::to_string(gc.equiv_residual) + ", expansion " +
                                        std::to_string(gc.exp_residual) + ")");
    }
  }
  GeneoSpace s;
  s.source_ = std::move(source);
  s.target_ = std::move(target);
  s.hom_ = std::move(hom);
  s.operators_ = std::move(operators);
  return s;
}

namespace {

void check_same_shape(const Geneo& a, const Geneo& b, const PerceptionPair& dst) {
  if (a.table.size() != b.table.size()) fail(ErrorKind::Shape, "operators act on different signal spaces");
  for (std::size_t t : a.table) {
    if (t >= dst.phi().size()) fail(ErrorKind::MalformedOperator, "operator maps outside Ψ");
  }
  for (std::size_t t : b.table) {
    if (t >= dst.phi().size()) fail(ErrorKind::MalformedOperator, "operator maps outside Ψ");
  }
}

}  // namespace

double geneo_distance(const Geneo& a, const Geneo& b, const PerceptionPair& dst) {
  check_same_shape(a, b, dst);
  double m = 0.0;
  for (std::size_t k = 0; k < a.table.size(); ++k) {
    m = std::max(m, signal_distance(dst.phi()[a.table[k]], dst.phi()[b.table[k]]));
  }
  return m;
}

double geneo_distance_natural(const Geneo& a, const Geneo& b, const PerceptionPair& dst) {
  check_same_shape(a, b, dst);
  double m = 0.0;
  for (std::size_t k = 0; k < a.table.size(); ++k) {
    m = std::max(m, natural_pseudo_distance(dst.group(), dst.phi()[a.table[k]].values,
                                            dst.phi()[b.table[k]].values));
  }
  return m;
}

double signal_distance_via_geneos(const GeneoSpace& space, std::size_t a, std::size_t b) {
  const std::size_t n = space.source().phi().size();
  if (a >= n || b >= n) fail(ErrorKind::Membership, "signal index outside Φ");
  double m = 0.0;
  for (const Geneo& f : space.operators()) {
    m = std::max(m, signal_distance(space.target().phi()[f.table[a]], space.target().phi()[f.table[b]]));
  }
  return m;
}

double signal_distance_via_geneos(const GeneoSpace& space, const Signal& a, const Signal& b) {
  const SignalSpace& phi = space.source().phi();
  if (a.size() != phi.domain_size() || b.size() != phi.domain_size()) {
    fail(ErrorKind::Shape, "signal is not defined on the source domain");
  }
  const std::size_t ia = phi.find(a.values);
  const std::size_t ib = phi.find(b.values);
  if (ia == kNoMatch || ib == kNoMatch) fail(ErrorKind::Membership, "signal is not a member of Φ");
  return signal_distance_via_geneos(space, ia, ib);
}

SurjectivityResult collectionwise_surjective(const GeneoSpace& space) {
  std::vector<bool> hit(space.target().phi().size(), false);
  for (const Geneo& f : space.operators()) {
    for (std::size_t t : f.table) hit[t] = true;
  }
  SurjectivityResult out;
  for (std::size_t k = 0; k < hit.size(); ++k) {
    if (!hit[k]) out.uncovered.push_back(k);
  }
  out.covered = out.uncovered.empty();
  return out;
}

HomNonexpansiveResult check_hom_nonexpansive(const GeneoSpace& space) {
  HomNonexpansiveResult out;
  out.precondition_met = collectionwise_surjective(space).covered;
  const PerceptionPair& src = space.source();
  const PerceptionPair& dst = space.target();
  const auto& T = space.hom().table;
  const std::size_t m = src.group().size();
  out.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const double v = aut_distance(dst, T[a], T[b]) - aut_distance(src, a, b);
      if (v > out.max_violation) {
        out.max_violation = v;
        out.witness = std::make_pair(a, b);
      }
    }
  }
  return out;
}

GeneoEnumeration enumerate_geneos(const PerceptionPair& src, const PerceptionPair& dst, const Homomorphism& hom,
                                  std::size_t cap) {
  GeneoEnumeration out;
  const std::size_t n = src.phi().size();
  const std::size_t radix = dst.phi().size();
  const double tol = std::max(src.tolerance(), dst.tolerance());
  if (radix == 0) return out;
  Geneo f;
  f.table.assign(n, 0);
  while (true) {
    if (out.tables >= cap) {
      out.complete = false;
      break;
    }
    ++out.tables;
    if (validate_geneo(f, src, dst, hom).valid(tol)) out.operators.push_back(f);
    // Odometer with the last entry fastest keeps the output lexicographic.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++f.table[pos] < radix) break;
      f.table[pos] = 0;
      if (pos == 0) {
        pos = n + 1;
        break;
      }
    }
    if (pos == n + 1 || n == 0) break;
  }
  return out;
}

}  // namespace geneo
