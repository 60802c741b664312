#pragma once

// Brute-force reference computations. Plain loops over std containers, no
// calls into the library, so they can serve as independent expected values.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;
using Perm = std::vector<std::uint32_t>;

inline double sup_diff(const Vec& a, const Vec& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline Mat point_metric(const std::vector<Vec>& signals, std::size_t n) {
  Mat d(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const Vec& s : signals) d[i][j] = std::max(d[i][j], std::abs(s[i] - s[j]));
  return d;
}

/// (φ∘g)(x) = φ(g(x))
inline Vec precompose(const Vec& phi, const Perm& g) {
  Vec out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = phi[g[x]];
  return out;
}

/// (a∘b)(x) = a(b(x))
inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t n) {
  std::set<Perm> g{identity(n)};
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Perm> now(g.begin(), g.end());
    for (const Perm& a : now)
      for (const Perm& s : gens) grew |= g.insert(compose(s, a)).second;
  }
  return g;
}

inline std::size_t find(const std::vector<Vec>& set, const Vec& v, double tol) {
  for (std::size_t k = 0; k < set.size(); ++k)
    if (sup_diff(set[k], v) <= tol) return k;
  return static_cast<std::size_t>(-1);
}

inline bool is_phi_op(const std::vector<Vec>& phi, const Perm& g, double tol) {
  for (const Vec& s : phi)
    if (find(phi, precompose(s, g), tol) == static_cast<std::size_t>(-1)) return false;
  return true;
}

inline Perm inverse(const Perm& g) {
  Perm inv(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) inv[g[x]] = static_cast<std::uint32_t>(x);
  return inv;
}

/// Every permutation whose action and inverse action preserve Φ.
inline std::vector<Perm> automorphisms(const std::vector<Vec>& phi, std::size_t n, double tol) {
  std::vector<Perm> out;
  Perm p = identity(n);
  do {
    if (is_phi_op(phi, p, tol) && is_phi_op(phi, inverse(p), tol)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline double d_inf(const Mat& d, const Perm& f, const Perm& g) {
  double m = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) m = std::max(m, d[f[x]][g[x]]);
  return m;
}

inline double aut_by_signals(const std::vector<Vec>& phi, const Perm& f, const Perm& g) {
  double m = 0.0;
  for (const Vec& s : phi) m = std::max(m, sup_diff(precompose(s, f), precompose(s, g)));
  return m;
}

inline double hausdorff(std::size_t na, std::size_t nb, const std::function<double(std::size_t, std::size_t)>& d) {
  double h = 0.0;
  for (std::size_t a = 0; a < na; ++a) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < nb; ++b) best = std::min(best, d(a, b));
    h = std::max(h, best);
  }
  for (std::size_t b = 0; b < nb; ++b) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < na; ++a) best = std::min(best, d(a, b));
    h = std::max(h, best);
  }
  return h;
}

inline double natural(const std::vector<Perm>& group, const Vec& a, const Vec& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const Perm& g : group) best = std::min(best, sup_diff(a, precompose(b, g)));
  return best;
}

/// Residuals of a table operator F: Φ -> Ψ against T given as target perms
/// per source group element.
struct GeneoResiduals {
  double equiv = 0.0;
  double exp = 0.0;
};

inline GeneoResiduals geneo_residuals(const std::vector<Vec>& phi, const std::vector<Vec>& psi,
                                      const std::vector<std::size_t>& table, const std::vector<Perm>& g,
                                      const std::vector<Perm>& tg, double tol) {
  GeneoResiduals r;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      const std::size_t moved = find(phi, precompose(phi[i], g[k]), tol);
      const Vec lhs = psi[table[moved]];
      const Vec rhs = precompose(psi[table[i]], tg[k]);
      r.equiv = std::max(r.equiv, sup_diff(lhs, rhs));
    }
    for (std::size_t j = 0; j < phi.size(); ++j) {
      r.exp = std::max(r.exp, sup_diff(psi[table[i]], psi[table[j]]) - sup_diff(phi[i], phi[j]));
    }
  }
  return r;
}

/// Every table in |Ψ|^|Φ| with both residuals <= tol, in lexicographic order.
inline std::vector<std::vector<std::size_t>> all_geneos(const std::vector<Vec>& phi, const std::vector<Vec>& psi,
                                                        const std::vector<Perm>& g, const std::vector<Perm>& tg,
                                                        double tol) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < phi.size(); ++i) total *= psi.size();
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> t(phi.size());
    std::size_t c = code;
    for (std::size_t i = phi.size(); i-- > 0;) {
      t[i] = c % psi.size();
      c /= psi.size();
    }
    const GeneoResiduals r = geneo_residuals(phi, psi, t, g, tg, tol);
    if (r.equiv <= tol && r.exp <= tol) out.push_back(t);
  }
  return out;
}

/// Farthest-first traversal from point 0 until every point is within eps.
inline std::vector<std::size_t> farthest_first(const Mat& d, double eps) {
  const std::size_t n = d.size();
  std::vector<std::size_t> centers{0};
  for (;;) {
    std::size_t far = 0;
    double far_d = -1.0;
    for (std::size_t p = 0; p < n; ++p) {
      double near = std::numeric_limits<double>::infinity();
      for (std::size_t c : centers) near = std::min(near, d[p][c]);
      if (near > far_d) far_d = near, far = p;
    }
    if (far_d <= eps) return centers;
    centers.push_back(far);
  }
}

inline double circle_turns(double a, double b) {
  double f = std::fmod(std::abs(a - b), 1.0);
  return std::min(f, 1.0 - f);
}

/// min(2π·circular distance, 1) for angles in turns.
inline double circle_metric(double a, double b) { return std::min(2.0 * std::numbers::pi * circle_turns(a, b), 1.0); }

}  // namespace oracle
