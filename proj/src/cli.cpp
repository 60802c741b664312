#include "geneo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "geneo/compactify.hpp"
#include "geneo/error.hpp"
#include "geneo/io.hpp"
#include "geneo/scenarios.hpp"

namespace geneo {

namespace {

using io::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string input;
  std::string out;
  double eps = 0.0;
  std::size_t m = 64;
  std::vector<std::int64_t> denoms;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
  std::string family;
};

void emit(const Json& j, const Options& o, std::ostream& out) {
  const std::string text = io::dump(j);
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) fail(ErrorKind::Parameter, "cannot write " + o.out);
  f << text;
}

void require_eps(double eps) {
  if (!(eps > 0.0)) fail(ErrorKind::Parameter, "--eps must be positive");
}

Json violations_json(const std::vector<Violation>& vs) {
  static const char* names[] = {"negative", "diagonal", "symmetry", "triangle"};
  Json out = Json::array();
  for (const Violation& v : vs) {
    out.push_back({{"kind", names[static_cast<int>(v.kind)]},
                   {"i", v.i},
                   {"j", v.j},
                   {"k", v.k},
                   {"excess", io::round12(v.excess)}});
  }
  return out;
}

Json pair_checks(const PerceptionPair& pair, bool& ok) {
  const auto vs = validate_pseudo_metric(pair.domain(), pair.tolerance());
  Json ops = Json::array();
  bool ops_ok = true;
  for (const OperationMap& g : pair.group()) {
    const OperationCheck c = validate_operation(pair.phi(), g);
    ops_ok = ops_ok && c.is_phi_op && c.is_invertible;
    ops.push_back({{"is_phi_op", c.is_phi_op}, {"is_invertible", c.is_invertible}, {"residual", io::round12(c.residual)}});
  }
  const SeparationResult sep = separation_check(pair);
  ok = vs.empty() && ops_ok;
  Json j = {{"points", pair.points()},
            {"signals", pair.phi().size()},
            {"group_order", pair.group().size()},
            {"pseudo_metric_violations", violations_json(vs)},
            {"operations", std::move(ops)},
            {"separated", sep.separated},
            {"valid", ok}};
  if (sep.witness) j["separation_witness"] = Json::array({sep.witness->first, sep.witness->second});
  return j;
}

Json space_checks(const GeneoSpace& space, bool& ok) {
  const double tol = std::max(space.source().tolerance(), space.target().tolerance());
  ok = true;
  Json ops = Json::array();
  for (const Geneo& f : space.operators()) {
    const GeneoCheck c = validate_geneo(f, space.source(), space.target(), space.hom());
    ok = ok && c.valid(tol);
    ops.push_back({{"equiv_residual", io::round12(c.equiv_residual)},
                   {"exp_residual", io::round12(c.exp_residual)},
                   {"valid", c.valid(tol)}});
  }
  const SurjectivityResult surj = collectionwise_surjective(space);
  const HomNonexpansiveResult hn = check_hom_nonexpansive(space);
  if (hn.precondition_met) ok = ok && hn.max_violation <= tol;
  Json dist = Json::array();
  for (const Geneo& a : space.operators()) {
    Json row = Json::array();
    for (const Geneo& b : space.operators()) row.push_back(io::round12(geneo_distance(a, b, space.target())));
    dist.push_back(std::move(row));
  }
  return {{"operators", std::move(ops)},
          {"collectionwise_surjective", {{"covered", surj.covered}, {"uncovered", surj.uncovered}}},
          {"hom_nonexpansive",
           {{"max_violation", io::round12(hn.max_violation)}, {"precondition_met", hn.precondition_met}}},
          {"geneo_distance", std::move(dist)},
          {"valid", ok}};
}

std::filesystem::path base_of(const std::string& input) { return std::filesystem::path(input).parent_path(); }

int cmd_validate(const Options& o, std::ostream& out) {
  const Json j = io::read_file(o.input);
  bool ok = false;
  Json result;
  if (j.is_object() && j.contains("operators")) {
    const io::LoadedSpace s = io::space_from_json(j, base_of(o.input), o.tolerance);
    bool src_ok = false, dst_ok = false;
    result = {{"kind", "geneo_space"},
              {"source", pair_checks(s.space->source(), src_ok)},
              {"target", pair_checks(s.space->target(), dst_ok)},
              {"space", space_checks(*s.space, ok)}};
    ok = ok && src_ok && dst_ok;
  } else if (j.is_object() && j.contains("points")) {
    const PerceptionPair pair = io::pair_from_json(j, o.tolerance);
    result = pair_checks(pair, ok);
    result["kind"] = "perception_pair";
  } else {
    const DistanceMatrix d = io::distance_matrix_from_json(j);
    const auto vs = validate_pseudo_metric(d, o.tolerance.value_or(kDefaultTolerance));
    ok = vs.empty();
    result = {{"kind", "distance_matrix"}, {"violations", violations_json(vs)}, {"valid", ok}};
  }
  emit(result, o, out);
  return ok ? kOk : kCheckFailed;
}

int cmd_net(const Options& o, std::ostream& out) {
  require_eps(o.eps);
  const Json j = io::read_file(o.input);
  DistanceMatrix d;
  if (j.is_object() && j.contains("points")) {
    d = io::pair_from_json(j, o.tolerance).domain();
  } else {
    d = io::distance_matrix_from_json(j);
  }
  emit(io::to_json(greedy_eps_net(d, o.eps)), o, out);
  return kOk;
}

int cmd_geneo_check(const Options& o, std::ostream& out) {
  const io::LoadedSpace s = io::space_from_json(io::read_file(o.input), base_of(o.input), o.tolerance);
  bool ok = false;
  Json result = space_checks(*s.space, ok);
  emit(result, o, out);
  return ok ? kOk : kCheckFailed;
}

int cmd_compactify(const Options& o, std::ostream& out) {
  const io::LoadedSpace s = io::space_from_json(io::read_file(o.input), base_of(o.input), o.tolerance);
  double eps = o.eps;
  if (!(eps > 0.0) && s.circle && s.circle->eps) eps = *s.circle->eps;
  require_eps(eps);
  CompactificationReport r;
  if (s.circle) {
    const PresentedPair src = circle_presented(s.space->source_ptr(), s.circle->m);
    const PresentedPair dst = s.space->target_ptr() == s.space->source_ptr()
                                  ? src
                                  : circle_presented(s.space->target_ptr(), s.circle->m);
    r = verify_compactification(src, dst, *s.space, eps);
  } else {
    r = verify_compactification(*s.space, eps);
  }
  emit(io::to_json(r), o, out);
  return r.all_pass() ? kOk : kCheckFailed;
}

int cmd_scenario_circle(const Options& o, std::ostream& out) {
  std::vector<std::int64_t> denoms = o.denoms;
  if (denoms.empty()) denoms = {static_cast<std::int64_t>(o.m)};
  const CircleSpace cs = gen_circle_space(o.m, denoms);
  io::CirclePresentationSpec spec{o.m, denoms, std::nullopt};
  if (o.eps > 0.0) spec.eps = o.eps;
  emit(io::to_json(*cs.space, spec), o, out);
  return kOk;
}

int cmd_scenario_random(const Options& o, std::ostream& out) {
  std::shared_ptr<const GeneoSpace> space;
  if (o.family.empty()) {
    space = gen_random_space(o.seed);
  } else if (o.family == "precompose") {
    space = gen_random_space(o.seed, RandomFamily::Precompose);
  } else if (o.family == "fiber") {
    space = gen_random_space(o.seed, RandomFamily::Fiber);
  } else {
    fail(ErrorKind::Parameter, "unknown family " + o.family);
  }
  emit(io::to_json(*space), o, out);
  return kOk;
}

int cmd_report(const Options& o, std::ostream& out) {
  const CompactificationReport r = io::report_from_json(io::read_file(o.input));
  std::size_t width = 4;
  for (const Condition& c : r.conditions) width = std::max(width, c.name.size());
  out << "eps " << r.eps << (r.saturated ? "" : "  (unsaturated)") << "\n";
  for (const Condition& c : r.conditions) {
    out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
        << std::setw(14) << c.residual << " <= " << c.bound << "\n";
  }
  out << "nets  phi_bar " << r.net_sizes.phi_bar << "  g_bar " << r.net_sizes.g_bar << "  f_bar " << r.net_sizes.f_bar
      << "\n";
  return r.all_pass() ? kOk : kCheckFailed;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Precondition:
    case ErrorKind::Resolution:
    case ErrorKind::Unsaturated:
    case ErrorKind::InternalConsistency:
      return kCheckFailed;
    default:
      return kBadInput;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perception pairs, GENEOs and their compactifications", "geneo"};
  app.require_subcommand(1);
  Options o;
  int (*handler)(const Options&, std::ostream&) = nullptr;

  const auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", o.tolerance, "matching tolerance τ")->check(CLI::NonNegativeNumber);
  };

  auto* validate = app.add_subcommand("validate", "validate a distance matrix, perception pair or GENEO space");
  validate->add_option("input", o.input)->required();
  validate->add_option("--out", o.out);
  add_tolerance(validate);
  validate->callback([&] { handler = cmd_validate; });

  auto* net = app.add_subcommand("net", "greedy eps-net of a distance matrix or pair domain");
  net->add_option("input", o.input)->required();
  net->add_option("--eps", o.eps)->required();
  net->add_option("--out", o.out);
  add_tolerance(net);
  net->callback([&] { handler = cmd_net; });

  auto* check = app.add_subcommand("geneo-check", "validate a GENEO space");
  check->add_option("input", o.input)->required();
  check->add_option("--out", o.out);
  add_tolerance(check);
  check->callback([&] { handler = cmd_geneo_check; });

  auto* comp = app.add_subcommand("compactify", "run the compactification pipeline and write its report");
  comp->add_option("input", o.input)->required();
  comp->add_option("--eps", o.eps);
  comp->add_option("--out", o.out);
  add_tolerance(comp);
  comp->callback([&] { handler = cmd_compactify; });

  auto* scen = app.add_subcommand("scenario", "generate a built-in scenario");
  scen->require_subcommand(1);
  auto* circle = scen->add_subcommand("circle", "rotations of a grid on the circle with tent signals");
  circle->add_option("--m", o.m)->check(CLI::PositiveNumber);
  circle->add_option("--denoms", o.denoms)->delimiter(',');
  circle->add_option("--eps", o.eps);
  circle->add_option("--out", o.out);
  circle->callback([&] { handler = cmd_scenario_circle; });
  auto* random = scen->add_subcommand("random", "random finite GENEO space");
  random->add_option("--seed", o.seed);
  random->add_option("--family", o.family)->check(CLI::IsMember({"precompose", "fiber"}));
  random->add_option("--out", o.out);
  random->callback([&] { handler = cmd_scenario_random; });

  auto* report = app.add_subcommand("report", "summarize a compactification report");
  report->add_option("input", o.input)->required();
  report->callback([&] { handler = cmd_report; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kBadInput;
  }
  if (handler == nullptr) {
    err << app.help();
    return kBadInput;
  }
  try {
    return handler(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace geneo
