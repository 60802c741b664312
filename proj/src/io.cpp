#include "geneo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "geneo/error.hpp"

namespace geneo::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::MalformedInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

double real(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(std::string(what) + " must be finite");
  return v;
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

std::vector<double> reals(const Json& j, const char* what) {
  std::vector<double> out;
  for (const Json& v : array(j, what)) out.push_back(real(v, what));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(const Json& j, const char* what) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Json& p : array(j, what)) {
    if (!p.is_array() || p.size() != 2) bad(std::string(what) + " entries must be [int, int]");
    out.emplace_back(count(p[0], what), count(p[1], what));
  }
  return out;
}

/// Builds a total table from [from, to] pairs over `n` source indices.
std::vector<std::size_t> table_from_pairs(const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::size_t n,
                                          const char* what) {
  std::vector<std::size_t> table(n, kNoMatch);
  for (const auto& [a, b] : pairs) {
    if (a >= n) bad(std::string(what) + ": source index " + std::to_string(a) + " out of range");
    if (table[a] != kNoMatch && table[a] != b) bad(std::string(what) + ": index " + std::to_string(a) + " mapped twice");
    table[a] = b;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a] == kNoMatch) bad(std::string(what) + ": index " + std::to_string(a) + " unmapped");
  }
  return table;
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Json to_json(const DistanceMatrix& d) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Json row = Json::array();
    for (double v : d.row(i)) row.push_back(round12(v));
    rows.push_back(std::move(row));
  }
  return {{"n", d.size()}, {"d", std::move(rows)}};
}

DistanceMatrix distance_matrix_from_json(const Json& j) {
  const std::size_t n = count(field(j, "n"), "n");
  std::vector<std::vector<double>> rows;
  for (const Json& r : array(field(j, "d"), "d")) rows.push_back(reals(r, "d"));
  if (rows.size() != n) bad("\"d\" has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
  return DistanceMatrix::from_rows(rows);
}

Json to_json(const EpsNet& net) {
  Json cov = Json::array();
  for (const Cover& c : net.coverage) cov.push_back(Json::array({c.center, round12(c.distance)}));
  return {{"eps", round12(net.eps)}, {"centers", net.centers}, {"coverage", std::move(cov)}};
}

EpsNet eps_net_from_json(const Json& j) {
  EpsNet net;
  net.eps = real(field(j, "eps"), "eps");
  for (const Json& c : array(field(j, "centers"), "centers")) net.centers.push_back(count(c, "centers"));
  for (const Json& c : array(field(j, "coverage"), "coverage")) {
    if (!c.is_array() || c.size() != 2) bad("coverage entries must be [int, real]");
    net.coverage.push_back({count(c[0], "coverage"), real(c[1], "coverage")});
  }
  return net;
}

Json to_json(const PerceptionPair& pair) {
  Json signals = Json::array();
  for (const Signal& s : pair.phi().signals()) {
    Json v = Json::array();
    for (double x : s.values) v.push_back(round12(x));
    signals.push_back(std::move(v));
  }
  Json group = Json::array();
  for (const OperationMap& g : pair.group()) group.push_back({{"forward", g.forward}});
  return {{"points", pair.points()}, {"signals", std::move(signals)}, {"group", std::move(group)},
          {"tolerance", round12(pair.tolerance())}};
}

PerceptionPair pair_from_json(const Json& j, std::optional<double> tolerance) {
  const std::size_t n = count(field(j, "points"), "points");
  std::vector<Signal> signals;
  for (const Json& s : array(field(j, "signals"), "signals")) {
    std::vector<double> v = reals(s, "signals");
    if (v.size() != n) bad("signal length differs from \"points\"");
    signals.push_back(Signal::of(std::move(v)));
  }
  std::vector<OperationMap> gens;
  for (const Json& g : array(field(j, "group"), "group")) {
    std::vector<PointIndex> fwd;
    for (const Json& x : array(field(g, "forward"), "forward")) fwd.push_back(static_cast<PointIndex>(count(x, "forward")));
    gens.push_back(OperationMap::from_forward(std::move(fwd), n));
  }
  double tol = kDefaultTolerance;
  if (j.contains("tolerance")) tol = real(j["tolerance"], "tolerance");
  if (tolerance) tol = *tolerance;
  if (!(tol >= 0.0)) fail(ErrorKind::Parameter, "tolerance must be nonnegative");
  return PerceptionPair::create(std::move(signals), std::move(gens), tol);
}

namespace {

Json resolve_ref(const Json& ref, const std::filesystem::path& base) {
  if (ref.is_string()) {
    std::filesystem::path p = ref.get<std::string>();
    return read_file(p.is_absolute() ? p : base / p);
  }
  if (!ref.is_object()) bad("pair reference must be an object or a path");
  return ref;
}

/// Group index -> index in the target pair's list, matched by forward map.
std::size_t group_entry(const PerceptionPair& pair, const Json& j, std::size_t k) {
  const Json& list = field(j, "group");
  if (k >= list.size()) bad("T index " + std::to_string(k) + " out of range");
  std::vector<PointIndex> fwd;
  for (const Json& x : field(list[k], "forward")) fwd.push_back(static_cast<PointIndex>(x.get<std::size_t>()));
  auto idx = pair.index_of(OperationMap::from_forward(std::move(fwd), pair.points()));
  if (!idx) fail(ErrorKind::InternalConsistency, "listed group element missing after saturation");
  return *idx;
}

}  // namespace

LoadedSpace space_from_json(const Json& j, const std::filesystem::path& base, std::optional<double> tolerance) {
  const Json src_json = resolve_ref(field(j, "source"), base);
  const Json dst_json = resolve_ref(field(j, "target"), base);
  auto src = std::make_shared<const PerceptionPair>(pair_from_json(src_json, tolerance));
  auto dst = src_json == dst_json ? src : std::make_shared<const PerceptionPair>(pair_from_json(dst_json, tolerance));

  const auto tpairs = index_pairs(field(j, "T"), "T");
  Homomorphism hom;
  hom.table.assign(src->group().size(), kNoMatch);
  for (const auto& [a, b] : tpairs) {
    const std::size_t ga = group_entry(*src, src_json, a);
    const std::size_t gb = group_entry(*dst, dst_json, b);
    if (hom.table[ga] != kNoMatch && hom.table[ga] != gb) bad("T maps a group element twice");
    hom.table[ga] = gb;
  }
  // T is given on generators; extend along the saturation words.
  if (hom.table[0] == kNoMatch) hom.table[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < src->group().size(); ++a) {
      if (hom.table[a] == kNoMatch) continue;
      for (std::size_t b = 0; b < src->group().size(); ++b) {
        if (hom.table[b] == kNoMatch) continue;
        const std::size_t ab = src->compose_index(a, b);
        const std::size_t img = dst->compose_index(hom.table[a], hom.table[b]);
        if (hom.table[ab] == kNoMatch) {
          hom.table[ab] = img;
          changed = true;
        }
      }
    }
  }
  for (std::size_t v : hom.table) {
    if (v == kNoMatch) bad("\"T\" does not determine the homomorphism on the whole group");
  }

  const std::size_t nphi_listed = field(src_json, "signals").size();
  const std::size_t npsi_listed = field(dst_json, "signals").size();
  std::vector<Geneo> ops;
  for (const Json& op : array(field(j, "operators"), "operators")) {
    const auto listed = table_from_pairs(index_pairs(field(op, "table"), "table"), nphi_listed, "table");
    Geneo f;
    f.table.assign(src->phi().size(), kNoMatch);
    for (std::size_t a = 0; a < nphi_listed; ++a) {
      if (listed[a] >= npsi_listed) fail(ErrorKind::MalformedOperator, "operator table leaves Ψ");
      const std::size_t i = src->phi().dedup_map()[a];
      const std::size_t v = dst->phi().dedup_map()[listed[a]];
      if (f.table[i] != kNoMatch && f.table[i] != v) {
        fail(ErrorKind::MalformedOperator, "operator maps duplicate signals to different images");
      }
      f.table[i] = v;
    }
    ops.push_back(std::move(f));
  }

  LoadedSpace out;
  out.space = std::make_shared<const GeneoSpace>(GeneoSpace::create(src, dst, std::move(hom), std::move(ops)));
  if (j.contains("presentation")) {
    const Json& p = j["presentation"];
    if (!p.is_object() || !p.contains("kind") || p["kind"] != "circle") bad("unknown presentation kind");
    CirclePresentationSpec c;
    c.m = count(field(p, "m"), "m");
    for (const Json& d : array(field(p, "denoms"), "denoms")) {
      if (!d.is_number_integer()) bad("denoms must be integers");
      c.denoms.push_back(d.get<std::int64_t>());
    }
    if (p.contains("eps")) c.eps = real(p["eps"], "eps");
    out.circle = std::move(c);
  }
  return out;
}

Json to_json(const GeneoSpace& space, const std::optional<CirclePresentationSpec>& circle) {
  const PerceptionPair& src = space.source();
  const PerceptionPair& dst = space.target();
  Json T = Json::array();
  for (std::size_t k = 0; k < src.group().size(); ++k) T.push_back(Json::array({k, space.hom().table[k]}));
  Json ops = Json::array();
  for (const Geneo& f : space.operators()) {
    Json table = Json::array();
    for (std::size_t i = 0; i < f.table.size(); ++i) table.push_back(Json::array({i, f.table[i]}));
    ops.push_back({{"table", std::move(table)}});
  }
  Json j = {{"source", to_json(src)}, {"target", to_json(dst)}, {"T", std::move(T)}, {"operators", std::move(ops)}};
  if (circle) {
    Json p = {{"kind", "circle"}, {"m", circle->m}, {"denoms", circle->denoms}};
    if (circle->eps) p["eps"] = round12(*circle->eps);
    j["presentation"] = std::move(p);
  }
  return j;
}

Json to_json(const CompactificationReport& r) {
  Json conds = Json::array();
  for (const Condition& c : r.conditions) {
    conds.push_back({{"name", c.name}, {"residual", round12(c.residual)}, {"bound", round12(c.bound)}, {"pass", c.pass}});
  }
  return {{"eps", round12(r.eps)},
          {"conditions", std::move(conds)},
          {"net_sizes",
           {{"phi_bar", r.net_sizes.phi_bar},
            {"g_bar", r.net_sizes.g_bar},
            {"f_bar", r.net_sizes.f_bar},
            {"psi_bar", r.net_sizes.psi_bar},
            {"h_bar", r.net_sizes.h_bar}}},
          {"saturated", r.saturated}};
}

CompactificationReport report_from_json(const Json& j) {
  CompactificationReport r;
  r.eps = real(field(j, "eps"), "eps");
  for (const Json& c : array(field(j, "conditions"), "conditions")) {
    Condition cond;
    if (!field(c, "name").is_string()) bad("condition name must be a string");
    cond.name = c["name"].get<std::string>();
    cond.residual = real(field(c, "residual"), "residual");
    cond.bound = real(field(c, "bound"), "bound");
    if (!field(c, "pass").is_boolean()) bad("pass must be a boolean");
    cond.pass = c["pass"].get<bool>();
    r.conditions.push_back(std::move(cond));
  }
  const Json& ns = field(j, "net_sizes");
  r.net_sizes.phi_bar = count(field(ns, "phi_bar"), "phi_bar");
  r.net_sizes.g_bar = count(field(ns, "g_bar"), "g_bar");
  r.net_sizes.f_bar = count(field(ns, "f_bar"), "f_bar");
  if (ns.contains("psi_bar")) r.net_sizes.psi_bar = count(ns["psi_bar"], "psi_bar");
  if (ns.contains("h_bar")) r.net_sizes.h_bar = count(ns["h_bar"], "h_bar");
  if (!field(j, "saturated").is_boolean()) bad("saturated must be a boolean");
  r.saturated = j["saturated"].get<bool>();
  return r;
}

}  // namespace geneo::io
