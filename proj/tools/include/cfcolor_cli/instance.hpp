#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cfcolor/geometry.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfc::cli {

enum class Family { Intervals, Rectangles, Discs, Star, Custom };

std::string_view to_string(Family family);
/// Throws InputError for an unknown name.
Family parse_family(std::string_view name);
bool is_point_family(Family family);

/// Serialised problem instance. Point families carry their points, custom
/// instances their hyperedges. Points are stored rank-normalised.
struct InstanceFile {
  Family family = Family::Intervals;
  int n = 0;
  int t = 2;
  std::uint64_t seed = 0;
  std::vector<Point> points;
  std::vector<VertexSet> edges;

  bool operator==(const InstanceFile&) const = default;
};

nlohmann::ordered_json to_json(const InstanceFile& instance);
/// Schema-checks `j`; throws InputError on missing or mistyped fields and
/// on duplicate points. Point coordinates may be any distinct numbers and
/// are replaced by their ranks.
InstanceFile instance_from_json(const nlohmann::json& j);

/// n raw points with coordinates uniform in [0, 1), from a 64-bit Mersenne
/// twister seeded with `seed`.
std::vector<RawPoint> random_points(int n, std::uint64_t seed);

/// Deterministic instance of a generated family (not Custom).
InstanceFile generate_instance(Family family, int n, int t, std::uint64_t seed);

Hypergraph load_hypergraph(const InstanceFile& instance);
PointSet load_points(const InstanceFile& instance);

}  // namespace cfc::cli
