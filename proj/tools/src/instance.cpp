#include "cfcolor_cli/instance.hpp"

#include <random>
#include <string>

#include "cfcolor/constructions.hpp"
#include "cfcolor/errors.hpp"

namespace cfc::cli {

namespace {

constexpr struct {
  Family family;
  std::string_view name;
} kFamilies[] = {
    {Family::Intervals, "intervals"}, {Family::Rectangles, "rectangles"},
    {Family::Discs, "discs"},         {Family::Star, "star"},
    {Family::Custom, "custom"},
};

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("instance lacks \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("instance field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f.name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& f : kFamilies) {
    if (f.name == name) return f.family;
  }
  throw InputError("unknown family \"" + std::string(name) + "\"");
}

bool is_point_family(Family family) {
  return family == Family::Rectangles || family == Family::Discs;
}

nlohmann::ordered_json to_json(const InstanceFile& instance) {
  nlohmann::ordered_json j;
  j["family"] = std::string(to_string(instance.family));
  j["n"] = instance.n;
  j["t"] = instance.t;
  j["seed"] = instance.seed;
  if (is_point_family(instance.family)) {
    auto points = nlohmann::ordered_json::array();
    for (const auto& p : instance.points) points.push_back({p.x, p.y});
    j["points"] = points;
  }
  if (instance.family == Family::Custom) j["edges"] = instance.edges;
  return j;
}

InstanceFile instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  InstanceFile inst;
  inst.family = parse_family(field<std::string>(j, "family"));
  inst.n = field<int>(j, "n");
  if (inst.n < 1) throw InputError("instance needs n >= 1");
  if (j.contains("t")) inst.t = field<int>(j, "t");
  if (j.contains("seed")) inst.seed = field<std::uint64_t>(j, "seed");
  if (is_point_family(inst.family)) {
    if (j.contains("points")) {
      const auto raw = field<std::vector<std::vector<double>>>(j, "points");
      std::vector<RawPoint> pts;
      for (const auto& p : raw) {
        if (p.size() != 2) throw InputError("each point needs two coordinates");
        pts.push_back({p[0], p[1]});
      }
      if (static_cast<int>(pts.size()) != inst.n) {
        throw InputError("point list length differs from n");
      }
      // Arbitrary distinct coordinates; stored by rank.
      inst.points = rank_normalize(pts).points();
    } else {
      inst.points = load_points(generate_instance(inst.family, inst.n, inst.t, inst.seed)).points();
    }
  }
  if (inst.family == Family::Custom) {
    inst.edges = field<std::vector<VertexSet>>(j, "edges");
    Hypergraph check(inst.n, inst.edges);
  }
  return inst;
}

std::vector<RawPoint> random_points(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // 53 random mantissa bits; independent of the standard library's
  // distribution implementations.
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<RawPoint> raw(static_cast<std::size_t>(n));
  for (auto& p : raw) {
    p.x = unit();
    p.y = unit();
  }
  return raw;
}

InstanceFile generate_instance(Family family, int n, int t, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("n must be >= 1");
  if (t < 1) throw ArgumentError("t must be >= 1");
  InstanceFile inst;
  inst.family = family;
  inst.n = n;
  inst.t = t;
  inst.seed = seed;
  switch (family) {
    case Family::Intervals:
      break;
    case Family::Rectangles:
    case Family::Discs: {
      const auto raw = random_points(n, seed);
      inst.points = rank_normalize(raw).points();
      break;
    }
    case Family::Star:
      star_hypergraph(n, t);  // parameter check
      break;
    case Family::Custom:
      throw ArgumentError("custom instances are written by hand, not generated");
  }
  return inst;
}

Hypergraph load_hypergraph(const InstanceFile& instance) {
  switch (instance.family) {
    case Family::Intervals:
      return interval_hypergraph(instance.n);
    case Family::Rectangles:
      return rectangle_hypergraph(load_points(instance));
    case Family::Discs:
      return disc_hypergraph(load_points(instance));
    case Family::Star:
      return star_hypergraph(instance.n, instance.t);
    case Family::Custom:
      return Hypergraph(instance.n, instance.edges);
  }
  throw ArgumentError("unknown family");
}

PointSet load_points(const InstanceFile& instance) {
  if (!is_point_family(instance.family)) {
    throw ArgumentError(std::string(to_string(instance.family)) + " instances have no points");
  }
  return PointSet(instance.points);
}

}  // namespace cfc::cli
