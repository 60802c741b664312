#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "geneo/compactify.hpp"
#include "geneo/metric.hpp"
#include "geneo/operators.hpp"
#include "geneo/perception.hpp"

namespace geneo::io {

using Json = nlohmann::json;

/// x rounded to 12 significant digits, so dumps are byte-stable.
double round12(double x);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);
/// Throws MalformedInput on a syntax error.
Json parse(const std::string& text);
Json read_file(const std::filesystem::path& path);

Json to_json(const DistanceMatrix& d);
DistanceMatrix distance_matrix_from_json(const Json& j);

Json to_json(const EpsNet& net);
EpsNet eps_net_from_json(const Json& j);

/// Writes the whole group. On reading, the listed elements are taken as
/// generators and saturated.
Json to_json(const PerceptionPair& pair);
PerceptionPair pair_from_json(const Json& j, std::optional<double> tolerance = std::nullopt);

struct CirclePresentationSpec {
  std::size_t m = 0;
  std::vector<std::int64_t> denoms;
  std::optional<double> eps;
};

struct LoadedSpace {
  std::shared_ptr<const GeneoSpace> space;
  std::optional<CirclePresentationSpec> circle;  // present when both pairs are the circle scenario
};

/// Pair references are inline objects or paths relative to `base`. Indices in
/// "T" refer to the listed group entries and T is extended to products of
/// them; indices in "operators" refer to the listed signals, before
/// deduplication.
LoadedSpace space_from_json(const Json& j, const std::filesystem::path& base = {},
                            std::optional<double> tolerance = std::nullopt);
Json to_json(const GeneoSpace& space, const std::optional<CirclePresentationSpec>& circle = std::nullopt);

Json to_json(const CompactificationReport& r);
CompactificationReport report_from_json(const Json& j);

}  // namespace geneo::io
