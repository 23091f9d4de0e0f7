#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cfcolor/validate.hpp"
#include "cfcolor_cli/instance.hpp"

namespace cfc::cli {

/// Algorithms accepted by run_colour.
inline const std::vector<std::string> kAlgorithms = {"t-um+sum", "union-pairs",
                                                     "interval-union", "rect-subset"};

struct ColourOptions {
  std::string algorithm;
  /// Overrides the instance's t when set.
  std::optional<int> t;
  bool trace = false;
  bool timing = false;
};

struct RunOutcome {
  nlohmann::ordered_json report;
  bool valid = false;
  std::size_t tokens = 0;
  /// Edge count of the graph the algorithm colours first, if it has one.
  std::optional<std::size_t> graph_edges;
  double millis = 0;
};

/// Runs the algorithm and its matching validator. Throws ArgumentError if
/// the algorithm does not apply to the instance family.
RunOutcome run_colour(const InstanceFile& instance, const ColourOptions& options);

/// Minimum colour count under `notion`, or with `subset` the minimum token
/// count of a t-subset-CF colouring.
nlohmann::ordered_json run_exact(const InstanceFile& instance, std::optional<Notion> notion,
                                 std::optional<int> t);

/// Re-validates the colouring stored in a report produced by run_colour.
Verdict verify_report(const InstanceFile& instance, const nlohmann::json& report);

inline constexpr const char* kBenchHeader = "family,n,t,seed,algorithm,tokens,edges_of_G,valid,millis";

struct BenchRow {
  Family family = Family::Intervals;
  int n = 0;
  int t = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::size_t tokens = 0;
  std::optional<std::size_t> graph_edges;
  bool valid = false;
  double millis = 0;
};

/// `trials` instances per n with seeds seed, seed + 1, ...
std::vector<BenchRow> run_bench(Family family, const std::vector<int>& ns, int t, int trials,
                                std::uint64_t seed, const std::string& algorithm);
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Algorithm used when none is given for a family.
std::string default_algorithm(Family family);

}  // namespace cfc::cli
