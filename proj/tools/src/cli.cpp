#include "cfcolor_cli/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cfcolor/errors.hpp"
#include "cfcolor_cli/instance.hpp"
#include "cfcolor_cli/runs.hpp"

namespace cfc::cli {

namespace {

struct InstanceArgs {
  std::string path;
  std::string family;
  int n = 0;
  int t = 2;
  std::uint64_t seed = 0;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

InstanceFile resolve_instance(const InstanceArgs& args) {
  if (!args.path.empty()) {
    InstanceFile inst = instance_from_json(read_json(args.path));
    return inst;
  }
  if (args.family.empty()) throw ArgumentError("give --instance or --family with --n");
  return generate_instance(parse_family(args.family), args.n, args.t, args.seed);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw InputError("cannot write " + out_path);
  file << text;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conflict-free colourings of hypergraph vertex subsets"};
  app.name("cfcolor");
  app.require_subcommand(1);

  InstanceArgs gen_args;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("--family", gen_args.family, "intervals|rectangles|discs|star")->required();
  gen->add_option("--n", gen_args.n, "Number of vertices")->required();
  gen->add_option("--t", gen_args.t, "Parameter t");
  gen->add_option("--seed", gen_args.seed, "Random seed");
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  InstanceArgs colour_args;
  std::string algorithm, colour_out;
  std::optional<int> colour_t;
  bool trace = false, timing = false;
  auto* colour = app.add_subcommand("colour", "Colour an instance and validate the result");
  colour->alias("color");
  colour->add_option("--instance", colour_args.path, "Instance JSON file");
  colour->add_option("--family", colour_args.family, "Generate: intervals|rectangles|discs|star");
  colour->add_option("--n", colour_args.n, "Generate: number of vertices");
  colour->add_option("--seed", colour_args.seed, "Generate: random seed");
  colour->add_option("--t", colour_t, "Subset size t");
  colour->add_option("--algorithm", algorithm, "t-um+sum|union-pairs|interval-union|rect-subset");
  colour->add_option("--out", colour_out, "Report path (default stdout)");
  colour->add_flag("--trace", trace, "Include per-round summaries");
  colour->add_flag("--timing", timing, "Include wall time (makes reports non-reproducible)");

  InstanceArgs exact_args;
  std::string notion_name = "cf", exact_out;
  std::optional<int> exact_t;
  auto* exact = app.add_subcommand("exact", "Exact minimum colour count of a small instance");
  exact->add_option("--instance", exact_args.path, "Instance JSON file");
  exact->add_option("--family", exact_args.family, "Generate: intervals|rectangles|discs|star");
  exact->add_option("--n", exact_args.n, "Generate: number of vertices");
  exact->add_option("--seed", exact_args.seed, "Generate: random seed");
  exact->add_option("--t", exact_t, "Parameter t");
  exact->add_option("--notion", notion_name,
                    "proper|cf|um|colourful|strong-cf|t-um|subset-cf");
  exact->add_option("--out", exact_out, "Report path (default stdout)");

  std::string bench_family, bench_alg, bench_out;
  std::vector<int> bench_ns;
  int bench_t = 2, trials = 1;
  std::uint64_t bench_seed = 0;
  auto* bench = app.add_subcommand("bench", "Token counts over seeded instances, as CSV");
  bench->add_option("--family", bench_family, "intervals|rectangles|discs|star")->required();
  bench->add_option("--n", bench_ns, "Comma-separated sizes")->delimiter(',');
  bench->add_option("--t", bench_t, "Subset size t");
  bench->add_option("--trials", trials, "Instances per size");
  bench->add_option("--seed", bench_seed, "First seed");
  bench->add_option("--algorithm", bench_alg, "Algorithm (default per family)");
  bench->add_option("--out", bench_out, "CSV path (default stdout)");

  std::string report_path, verify_instance;
  auto* verify = app.add_subcommand("verify", "Re-validate the colouring stored in a report");
  verify->add_option("--report", report_path, "Report JSON from colour")->required();
  verify->add_option("--instance", verify_instance, "Instance file (default: the report's)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const InstanceFile inst =
          generate_instance(parse_family(gen_args.family), gen_args.n, gen_args.t, gen_args.seed);
      emit(to_json(inst).dump(2) + "\n", gen_out, out);
      return kExitValid;
    }
    if (colour->parsed()) {
      if (colour_t) colour_args.t = *colour_t;
      const InstanceFile inst = resolve_instance(colour_args);
      ColourOptions opts{algorithm.empty() ? default_algorithm(inst.family) : algorithm, colour_t,
                         trace, timing};
      const RunOutcome run = run_colour(inst, opts);
      emit(run.report.dump(2) + "\n", colour_out, out);
      if (!run.valid) err << "invalid colouring\n";
      return run.valid ? kExitValid : kExitInvalid;
    }
    if (exact->parsed()) {
      if (exact_t) exact_args.t = *exact_t;
      const InstanceFile inst = resolve_instance(exact_args);
      std::optional<Notion> notion;
      if (notion_name != "subset-cf") notion = parse_notion(notion_name);
      emit(run_exact(inst, notion, exact_t).dump(2) + "\n", exact_out, out);
      return kExitValid;
    }
    if (bench->parsed()) {
      const Family family = parse_family(bench_family);
      const std::string alg = bench_alg.empty() ? default_algorithm(family) : bench_alg;
      std::ostringstream csv;
      write_csv(csv, run_bench(family, bench_ns, bench_t, trials, bench_seed, alg));
      emit(csv.str(), bench_out, out);
      return kExitValid;
    }
    if (verify->parsed()) {
      const nlohmann::json report = read_json(report_path);
      const InstanceFile inst = verify_instance.empty()
                                    ? instance_from_json(report.at("instance"))
                                    : instance_from_json(read_json(verify_instance));
      const Verdict v = verify_report(inst, report);
      nlohmann::ordered_json j;
      j["valid"] = v.valid;
      j["counterexample"] =
          v.counterexample ? nlohmann::ordered_json(*v.counterexample) : nlohmann::ordered_json(nullptr);
      out << j.dump(2) << "\n";
      return v.valid ? kExitValid : kExitInvalid;
    }
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cfc::cli
