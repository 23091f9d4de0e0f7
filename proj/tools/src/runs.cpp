#include "cfcolor_cli/runs.hpp"

#include <chrono>
#include <iomanip>

#include "cfcolor/colouring.hpp"
#include "cfcolor/errors.hpp"
#include "cfcolor/exact.hpp"

namespace cfc::cli {

namespace {

using Json = nlohmann::ordered_json;

Json tokens_json(const SubsetColouring& sigma) {
  auto list = Json::array();
  for (std::uint64_t r = 0; r < sigma.num_subsets(); ++r) {
    list.push_back(sigma.distinct_tokens()[sigma.token_id(r)].to_string());
  }
  return list;
}

void require_family(const InstanceFile& instance, Family family, const std::string& algorithm) {
  if (instance.family != family) {
    throw ArgumentError(algorithm + " needs a " + std::string(to_string(family)) + " instance");
  }
}

Json trace_json(const std::vector<MetaStep>& trace) {
  auto rounds = Json::array();
  for (std::size_t i = 0; i < trace.size(); ++i) {
    rounds.push_back({{"round", i + 1},
                      {"surviving", trace[i].surviving.size()},
                      {"aux_colours", trace[i].aux.colours_used()}});
  }
  return rounds;
}

AuxColouringFn colourful_aux(int t) {
  return [t](const Hypergraph& sub) { return greedy_colourful(sub, t); };
}

}  // namespace

std::string default_algorithm(Family family) {
  switch (family) {
    case Family::Intervals:
      return "interval-union";
    case Family::Rectangles:
      return "rect-subset";
    default:
      return "t-um+sum";
  }
}

RunOutcome run_colour(const InstanceFile& instance, const ColourOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::string& alg = options.algorithm;
  int t = options.t.value_or(instance.t);
  RunOutcome out;
  SubsetColouring sigma;
  Verdict verdict;
  std::optional<VertexColouring> vertex;
  std::vector<MetaStep> trace;
  Json extra = Json::object();

  if (alg == "t-um+sum") {
    if (t < 1) throw ArgumentError("t must be >= 1");
    const Hypergraph h = load_hypergraph(instance);
    vertex = meta_colour(h, colourful_aux(t), &trace);
    extra["premise_valid"] = validate(h, *vertex, Notion::TUM, t).valid;
    sigma = subset_cf_from_t_um(*vertex, t, h.num_vertices());
    verdict = validate_subset_cf(h, sigma);
    out.graph_edges = build_Gt(h, t + 1).num_edges();
  } else if (alg == "union-pairs") {
    if (options.t && *options.t != 2) throw ArgumentError("union-pairs colours pairs (t = 2)");
    t = 2;
    const Hypergraph h = load_hypergraph(instance);
    vertex = meta_colour(h, colourful_aux(2), &trace);
    extra["premise_valid"] = validate(h, *vertex, Notion::TUM, 2).valid;
    sigma = union_pairs_colouring(h, *vertex);
    verdict = validate_subset_cf(union_hypergraph(h), sigma);
    out.graph_edges = build_Gt(h, 3).num_edges();
  } else if (alg == "interval-union") {
    require_family(instance, Family::Intervals, alg);
    if (options.t && *options.t != 2) throw ArgumentError("interval-union colours pairs (t = 2)");
    t = 2;
    vertex = interval_um(instance.n);
    sigma = interval_union_pairs(instance.n);
    verdict = validate_interval_union(sigma);
  } else if (alg == "rect-subset") {
    require_family(instance, Family::Rectangles, alg);
    const PointSet points = load_points(instance);
    RectSubsetResult res = rect_subset_cf(points, t);
    verdict = validate_subset_cf(rectangle_hypergraph(points), res.colouring);
    out.graph_edges = res.ratio_graph.num_edges();
    extra["ratio_graph_colours"] = res.ratio_graph_colours;
    vertex = std::move(res.vertex_colouring);
    trace = std::move(res.trace);
    sigma = std::move(res.colouring);
  } else {
    throw ArgumentError("unknown algorithm \"" + alg + "\"");
  }

  out.valid = verdict.valid;
  out.tokens = sigma.tokens_used();
  Json& r = out.report;
  r["instance"] = to_json(instance);
  r["algorithm"] = alg;
  r["t"] = t;
  r["tokens"] = out.tokens;
  r["valid"] = out.valid;
  r["counterexample"] = verdict.counterexample ? Json(*verdict.counterexample) : Json(nullptr);
  if (out.graph_edges) r["edges_of_G"] = *out.graph_edges;
  for (auto& [key, value] : extra.items()) r[key] = value;
  if (vertex) {
    r["vertex_colours_used"] = vertex->colours_used();
    r["vertex_colouring"] = vertex->colours();
  }
  r["colouring"] = {{"t", t}, {"tokens", tokens_json(sigma)}};
  if (options.trace) r["trace"] = trace_json(trace);
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (options.timing) r["millis"] = out.millis;
  return out;
}

nlohmann::ordered_json run_exact(const InstanceFile& instance, std::optional<Notion> notion,
                                 std::optional<int> t) {
  const Hypergraph h = load_hypergraph(instance);
  Json r;
  r["instance"] = to_json(instance);
  r["hyperedges"] = h.num_edges();
  if (notion) {
    const std::optional<int> param = is_parametric(*notion) ? std::optional<int>(t.value_or(instance.t))
                                                            : std::nullopt;
    const ExactVertexResult res = exact_chi(h, *notion, param);
    r["notion"] = std::string(to_string(*notion));
    if (param) r["t"] = *param;
    r["optimum"] = res.colours;
    r["witness"] = res.witness.colours();
  } else {
    const int k = t.value_or(instance.t);
    const ExactSubsetResult res = exact_chi_subset_cf(h, k);
    r["notion"] = "subset-cf";
    r["t"] = k;
    r["optimum"] = res.colours;
    r["witness"] = tokens_json(res.witness);
  }
  return r;
}

Verdict verify_report(const InstanceFile& instance, const nlohmann::json& report) {
  std::string alg;
  int t = 0;
  std::vector<Token> tokens;
  try {
    alg = report.at("algorithm").get<std::string>();
    t = report.at("colouring").at("t").get<int>();
    for (const auto& s : report.at("colouring").at("tokens")) {
      tokens.push_back(Token::parse(s.get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  const SubsetColouring sigma = SubsetColouring::from_tokens(instance.n, t, tokens);
  if (alg == "interval-union") return validate_interval_union(sigma);
  const Hypergraph h = load_hypergraph(instance);
  if (alg == "union-pairs") return validate_subset_cf(union_hypergraph(h), sigma);
  return validate_subset_cf(h, sigma);
}

std::vector<BenchRow> run_bench(Family family, const std::vector<int>& ns, int t, int trials,
                                std::uint64_t seed, const std::string& algorithm) {
  if (trials < 0) throw ArgumentError("trials must be >= 0");
  std::vector<BenchRow> rows;
  for (int n : ns) {
    for (int trial = 0; trial < trials; ++trial) {
      const std::uint64_t s = seed + static_cast<std::uint64_t>(trial);
      const InstanceFile inst = generate_instance(family, n, t, s);
      const RunOutcome run = run_colour(inst, {algorithm, t, false, false});
      rows.push_back({family, n, t, s, algorithm, run.tokens, run.graph_edges, run.valid, run.millis});
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchHeader << '\n';
  for (const auto& row : rows) {
    out << to_string(row.family) << ',' << row.n << ',' << row.t << ',' << row.seed << ','
        << row.algorithm << ',' << row.tokens << ',';
    if (row.graph_edges) out << *row.graph_edges;
    out << ',' << (row.valid ? "true" : "false") << ',' << std::fixed << std::setprecision(3)
        << row.millis << '\n';
    out << std::defaultfloat;
  }
}

}  // namespace cfc::cli
