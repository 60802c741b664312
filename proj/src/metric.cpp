#include "geneo/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "geneo/error.hpp"
#include "geneo/kernels.hpp"

namespace geneo {

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  DistanceMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      fail(ErrorKind::MalformedInput, "distance matrix row " + std::to_string(i) + " has " +
                                          std::to_string(rows[i].size()) + " entries, expected " +
                                          std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (!std::isfinite(rows[i][j])) {
        fail(ErrorKind::MalformedInput,
             "non-finite distance at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

double DistanceMatrix::diameter() const {
  return d_.empty() ? 0.0 : *std::max_element(d_.begin(), d_.end());
}

std::vector<std::vector<double>> DistanceMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

std::vector<Violation> validate_pseudo_metric(const DistanceMatrix& d, double tol) {
  using K = Violation::Kind;
  std::vector<Violation> out;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(d(i, i)) > tol) out.push_back({K::Diagonal, i, i, 0, std::abs(d(i, i))});
    for (std::size_t j = 0; j < n; ++j) {
      if (d(i, j) < -tol) out.push_back({K::Negative, i, j, 0, -d(i, j)});
      if (i < j && std::abs(d(i, j) - d(j, i)) > tol) {
        out.push_back({K::Symmetry, i, j, 0, std::abs(d(i, j) - d(j, i))});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double excess = d(i, k) - d(i, j) - d(j, k);
        if (excess > tol) out.push_back({K::Triangle, i, j, k, excess});
      }
    }
  }
  return out;
}

Quotient metric_quotient(const DistanceMatrix& d, double tol) {
  const std::size_t n = d.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d(i, j) <= tol) {
        const std::size_t a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  Quotient q;
  q.projection.assign(n, 0);
  std::vector<std::size_t> class_of_root(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (class_of_root[r] == std::numeric_limits<std::size_t>::max()) {
      class_of_root[r] = q.representative.size();
      q.representative.push_back(i);
    }
    q.projection[i] = class_of_root[r];
  }
  const std::size_t m = q.representative.size();
  q.metric = DistanceMatrix(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) q.metric.at(a, b) = d(q.representative[a], q.representative[b]);
  }
  return q;
}

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) fail(ErrorKind::Parameter, "eps must be positive and finite");
}

RowFn matrix_rows(const DistanceMatrix& d) {
  return [&d](std::size_t i, std::span<double> out) {
    const auto r = d.row(i);
    std::copy(r.begin(), r.end(), out.begin());
  };
}

}  // namespace

EpsNet greedy_eps_net(const DistanceMatrix& d, double eps) { return greedy_eps_net(d.size(), matrix_rows(d), eps); }

EpsNet greedy_eps_net(std::size_t n, const RowFn& row, double eps) {
  check_eps(eps);
  EpsNet net;
  net.eps = eps;
  if (n == 0) return net;
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> owner(n, 0);
  std::vector<double> buf(n);
  std::size_t next = 0;
  while (true) {
    net.centers.push_back(next);
    row(next, buf);
    // Strict improvement keeps the earliest center as owner on ties.
    for (std::size_t i = 0; i < n; ++i) {
      if (buf[i] < nearest[i]) {
        nearest[i] = buf[i];
        owner[i] = next;
      }
    }
    std::size_t far = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (nearest[i] > nearest[far]) far = i;
    }
    if (nearest[far] <= eps) break;
    next = far;
  }
  net.coverage.resize(n);
  for (std::size_t i = 0; i < n; ++i) net.coverage[i] = {owner[i], nearest[i]};
  return net;
}

std::size_t FarthestPointOrder::net_size(double eps) const {
  for (std::size_t k = 0; k < prefix_radius.size(); ++k) {
    if (prefix_radius[k] <= eps) return k + 1;
  }
  return order.size();
}

FarthestPointOrder farthest_point_order(std::size_t n, const RowFn& row, double stop_radius) {
  FarthestPointOrder fpo;
  if (n == 0) return fpo;
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  std::vector<double> buf(n);
  std::vector<bool> taken(n, false);
  std::size_t next = 0;
  for (std::size_t step = 0; step < n; ++step) {
    fpo.order.push_back(next);
    taken[next] = true;
    row(next, buf);
    kernels::min_accumulate(nearest, buf);
    std::size_t far = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      if (far == n || nearest[i] > nearest[far]) far = i;
    }
    const double radius = far == n ? 0.0 : std::max(0.0, nearest[far]);
    fpo.prefix_radius.push_back(radius);
    if (far == n || radius <= stop_radius) break;
    next = far;
  }
  return fpo;
}

double hausdorff_distance(std::span<const std::size_t> a, std::span<const std::size_t> b, const DistanceMatrix& d) {
  return hausdorff_distance(a.size(), b.size(), [&](std::size_t i, std::size_t j) { return d(a[i], b[j]); });
}

double hausdorff_distance(std::size_t na, std::size_t nb, const std::function<double(std::size_t, std::size_t)>& dist) {
  if (na == 0 || nb == 0) fail(ErrorKind::Parameter, "hausdorff distance of an empty set");
  std::vector<double> col_min(nb, std::numeric_limits<double>::infinity());
  double forward = 0.0;
  for (std::size_t i = 0; i < na; ++i) {
    double row_min = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < nb; ++j) {
      const double v = dist(i, j);
      row_min = std::min(row_min, v);
      col_min[j] = std::min(col_min[j], v);
    }
    forward = std::max(forward, row_min);
  }
  const double backward = *std::max_element(col_min.begin(), col_min.end());
  return std::max(forward, backward);
}

void check_schedule(std::span<const double> eps_schedule) {
  if (eps_schedule.empty()) fail(ErrorKind::Parameter, "empty eps schedule");
  for (std::size_t k = 0; k < eps_schedule.size(); ++k) {
    check_eps(eps_schedule[k]);
    if (k > 0 && !(eps_schedule[k] < eps_schedule[k - 1])) {
      fail(ErrorKind::Parameter, "eps schedule must be strictly decreasing");
    }
  }
}

std::vector<std::size_t> tb_profile(const DistanceMatrix& d, std::span<const double> eps_schedule) {
  check_schedule(eps_schedule);
  // Greedy nets for every radius are prefixes of one traversal, which makes
  // the profile monotone by construction.
  const FarthestPointOrder fpo = farthest_point_order(d.size(), matrix_rows(d), eps_schedule.back());
  std::vector<std::size_t> sizes;
  for (double eps : eps_schedule) sizes.push_back(fpo.net_size(eps));
  return sizes;
}

}  // namespace geneo
