// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// selected criteria pass.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfcolor/colouring.hpp"
#include "cfcolor/constructions.hpp"
#include "cfcolor/exact.hpp"
#include "cfcolor/geometry.hpp"
#include "cfcolor_cli/runs.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace cfc;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) first_ << (count_ > 1 ? "; " : "") << what;
  }
  int count() const { return count_; }
  std::string summary() const {
    return count_ == 0 ? std::string() : std::to_string(count_) + " failures, first: " + first_.str();
  }

 private:
  int count_ = 0;
  std::ostringstream first_;
};

double log2d(int n) { return std::log2(static_cast<double>(n)); }

// Instance sizes spread evenly over [lo, hi] across the 100 seeds.
int spread(int k, int lo, int hi) { return lo + k * (hi - lo) / 99; }

struct RectangleStats {
  int instances = 0;
  int edge_breaches = 0;
  int colour_breaches = 0;
  std::ostringstream worst;
};

RectangleStats g_rect_stats;

void record_rectangle_bounds(const PointSet& ps, int t) {
  const int n = ps.size();
  const RectSubsetResult r = rect_subset_cf(ps, t);
  const double edge_bound = 40.0 * t * n * log2d(n);
  const double colour_bound = 80.0 * t * log2d(n) + 1;
  ++g_rect_stats.instances;
  if (static_cast<double>(r.ratio_graph.num_edges()) > edge_bound) ++g_rect_stats.edge_breaches;
  if (r.ratio_graph_colours > colour_bound) ++g_rect_stats.colour_breaches;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome validity_suite() {
  const auto start = std::chrono::steady_clock::now();
  Failures fail;
  int runs = 0;
  const auto run = [&](const cli::InstanceFile& inst, const std::string& alg, int t) {
    ++runs;
    const cli::RunOutcome out = cli::run_colour(inst, {alg, t, false, false});
    if (!out.valid) {
      fail.add(std::string(cli::to_string(inst.family)) + " n=" + std::to_string(inst.n) +
               " seed=" + std::to_string(inst.seed) + " " + alg);
    }
  };
  for (int k = 0; k < 100; ++k) {
    const auto seed = static_cast<std::uint64_t>(k);
    // Intervals up to 255: sum colouring on H and the explicit union
    // colouring (profile-aggregated exact validator). The union-pairs
    // colouring is checked on the listed union hypergraph, up to n = 48.
    const cli::InstanceFile iv = cli::generate_instance(cli::Family::Intervals, spread(k, 2, 255), 2, seed);
    run(iv, "t-um+sum", 2);
    run(iv, "interval-union", 2);
    run(cli::generate_instance(cli::Family::Intervals, spread(k, 2, 48), 2, seed), "union-pairs", 2);
    if (iv.n <= 48) {
      const Verdict generic =
          validate_subset_cf(union_hypergraph(interval_hypergraph(iv.n)), interval_union_pairs(iv.n));
      if (!generic) fail.add("interval-union generic n=" + std::to_string(iv.n));
    }

    const int t = 2 + k % 2;
    const cli::InstanceFile rect = cli::generate_instance(cli::Family::Rectangles, spread(k, 3, 32), t, seed);
    run(rect, "rect-subset", t);
    run(rect, "t-um+sum", t);
    record_rectangle_bounds(cli::load_points(rect), t);

    const cli::InstanceFile disc = cli::generate_instance(cli::Family::Discs, spread(k, 2, 16), 2, seed);
    run(disc, "t-um+sum", 2);
    run(disc, "union-pairs", 2);
  }
  const double secs = seconds_since(start);
  if (secs > 600) fail.add("took longer than 10 minutes");
  Outcome o{fail.count() == 0, std::to_string(runs) + " validated runs"};
  if (fail.count()) o.detail += ", " + fail.summary();
  return o;
}

Outcome explicit_bounds() {
  // Rectangle instances of the validity suite plus larger seeded ones.
  for (int n : {48, 64, 96, 128}) {
    for (int t : {2, 3}) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        record_rectangle_bounds(cli::load_points(cli::generate_instance(cli::Family::Rectangles, n, t, seed)), t);
      }
    }
  }
  const RectangleStats& s = g_rect_stats;
  Outcome o;
  o.pass = s.instances > 0 && s.edge_breaches == 0 && s.colour_breaches == 0;
  o.detail = std::to_string(s.instances) + " instances, edge-bound breaches " + std::to_string(s.edge_breaches) +
             ", colour-bound breaches " + std::to_string(s.colour_breaches);
  return o;
}

Outcome interval_union_bound() {
  constexpr int kMax = 1023;
  Failures fail;
  const VertexColouring psi = interval_um(kMax);
  for (int i = 0; i < kMax; ++i) {
    if (psi[i] != 1 + std::countr_zero(static_cast<unsigned>(i + 1))) fail.add("ruler mismatch at " + std::to_string(i));
  }
  const SubsetColouring full = interval_union_pairs(kMax);
  const Verdict top = validate_interval_union(full);
  if (!top) fail.add("n=1023 invalid");
  std::size_t max_tokens = 0;
  for (int n = 3; n <= kMax; ++n) {
    const SubsetColouring sigma = interval_union_pairs(n);
    const VertexColouring psi_n = interval_um(n);
    if (!std::equal(psi_n.colours().begin(), psi_n.colours().end(), psi.colours().begin())) {
      fail.add("psi prefix n=" + std::to_string(n));
    }
    // Colex ranks of subsets of {0..n-1} agree between n and 1023, so the
    // n-colouring must be the restriction of the 1023-colouring.
    for (std::uint64_t r = 0; r < sigma.num_subsets(); ++r) {
      if (sigma.distinct_tokens()[sigma.token_id(r)] != full.distinct_tokens()[full.token_id(r)]) {
        fail.add("restriction n=" + std::to_string(n));
        break;
      }
    }
    const auto bound = static_cast<std::size_t>(4 * std::ceil(std::log2(n + 1.0)));
    if (sigma.tokens_used() > bound) fail.add("token bound n=" + std::to_string(n));
    max_tokens = std::max(max_tokens, sigma.tokens_used());
    if (n <= 128 && !validate_interval_union(sigma)) fail.add("invalid n=" + std::to_string(n));
  }
  Outcome o{fail.count() == 0, "n=3..1023 restrictions of the valid n=1023 colouring, max tokens " +
                                   std::to_string(max_tokens) + " (bound at 1023: 40)"};
  if (fail.count()) o.detail += ", " + fail.summary();
  return o;
}

Hypergraph random_instance(testing::Rng& rng) {
  const int n = testing::uniform(rng, 2, 9);
  switch (testing::uniform(rng, 0, 3)) {
    case 0: return interval_hypergraph(n);
    case 1: return rectangle_hypergraph(testing::random_point_set(rng, n));
    case 2: return disc_hypergraph(testing::random_point_set(rng, n));
    default: return testing::random_hypergraph(rng, n, testing::uniform(rng, 1, 10), 0.4);
  }
}

Outcome hierarchy_properties() {
  testing::Rng rng(2024);
  Failures fail;
  int premises = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Hypergraph h = random_instance(rng);
    const int n = h.num_vertices();
    const int t = testing::uniform(rng, 1, std::min(3, n));
    VertexColouring c;
    if (trial % 3 == 0) {
      c = testing::random_colouring(rng, n, testing::uniform(rng, 1, 4));
    } else {
      std::vector<Colour> v = t_um_colouring(h, t).colours();
      for (int f = testing::uniform(rng, 0, 2); f > 0; --f) {
        v[static_cast<std::size_t>(testing::uniform(rng, 0, n - 1))] = testing::uniform(rng, 1, 4);
      }
      c = VertexColouring(std::move(v));
    }
    const bool tum = validate(h, c, Notion::TUM, t).valid;
    const bool strong = validate(h, c, Notion::StrongCF, t).valid;
    const bool colourful = validate(h, c, Notion::Colourful, t).valid;
    if (tum && !strong) fail.add("t-UM but not t-strong-CF, trial " + std::to_string(trial));
    if (strong && !colourful) fail.add("t-strong-CF but not t-colourful, trial " + std::to_string(trial));
    if (!tum) continue;
    ++premises;
    const SubsetColouring phi = subset_cf_from_t_um(c, t, n);
    if (phi.tokens_used() > static_cast<std::size_t>(t) * static_cast<std::size_t>(c.max_colour())) {
      fail.add("token bound, trial " + std::to_string(trial));
    }
    if (!validate_subset_cf(h, phi)) fail.add("subset-CF invalid, trial " + std::to_string(trial));
  }
  Outcome o{fail.count() == 0, "1000 pairs, " + std::to_string(premises) + " with a t-UM premise"};
  if (fail.count()) o.detail += ", " + fail.summary();
  return o;
}

Outcome exact_fixtures() {
  const auto start = std::chrono::steady_clock::now();
  Failures fail;
  for (int n = 2; n <= 6; ++n) {
    const Hypergraph k = complete_pairs_hypergraph(n);
    if (exact_chi(k, Notion::CF).colours != n) fail.add("chi_CF(K" + std::to_string(n) + ")");
    if (exact_chi_subset_cf(k, 2).colours != 1) fail.add("chi2_CF(K" + std::to_string(n) + ")");
  }
  for (int n = 4; n <= 12; ++n) {
    if (exact_chi(star_hypergraph(n, 2), Notion::CF).colours != 2) fail.add("star n=" + std::to_string(n));
  }
  std::ostringstream lb;
  for (int n : {5, 8, 10}) {
    const LbUnionResult r = lbunion_check(n);
    lb << " n=" << n << ":" << r.chi << ">=" << r.bound;
    if (!r.holds || r.chi < r.bound) fail.add("lbunion n=" + std::to_string(n));
  }
  const IntervalLowerBoundTable table = interval_lb_table(7);
  if (!(table.chi(7) >= 1 + table.chi(3))) fail.add("interval recurrence");
  if (seconds_since(start) > 300) fail.add("solvers took longer than 5 minutes");
  Outcome o{fail.count() == 0, "K_2..K_6, star 4..12, lbunion" + lb.str() + ", chi(H_7)=" +
                                   std::to_string(table.chi(7)) + " chi(H_3)=" + std::to_string(table.chi(3))};
  if (fail.count()) o.detail += ", " + fail.summary();
  return o;
}

Outcome sparsity() {
  Failures fail;
  double worst_disc = 0;
  testing::Rng rng(77);
  for (int n = 2; n <= 16; ++n) {
    const Hypergraph intervals = interval_hypergraph(n);
    std::vector<Hypergraph> discs;
    for (int s = 0; s < 5; ++s) discs.push_back(disc_hypergraph(testing::random_point_set(rng, n)));
    for (int k = 1; k <= 6; ++k) {
      const double unit = n * std::exp(1.0) * k;
      if (static_cast<double>(count_pairs_in_small_hyperedges(intervals, k)) > unit) {
        fail.add("intervals n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
      for (const Hypergraph& d : discs) {
        const double ratio = static_cast<double>(count_pairs_in_small_hyperedges(d, k)) / unit;
        worst_disc = std::max(worst_disc, ratio);
        if (ratio > 3) fail.add("discs n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  for (int n = 3; n <= 30; ++n) {
    for (int s = 0; s < 3; ++s) {
      const auto edges = delaunay_graph(disc_hypergraph(testing::random_point_set(rng, n))).num_edges();
      if (static_cast<int>(edges) > 3 * n - 6) fail.add("planarity n=" + std::to_string(n));
    }
  }
  std::ostringstream d;
  d << "k<=6, n<=16; largest disc ratio c=" << std::setprecision(3) << worst_disc << "; Delaunay n=3..30";
  Outcome o{fail.count() == 0, d.str()};
  if (fail.count()) o.detail += ", " + fail.summary();
  return o;
}

Outcome growth_report(const std::string& csv_path) {
  const std::vector<int> ns{8, 16, 32, 64};
  const auto rows = cli::run_bench(cli::Family::Rectangles, ns, 2, 5, 0, "rect-subset");
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    cli::write_csv(out, rows);
  }
  std::map<int, std::vector<std::size_t>> tokens;
  bool all_valid = true;
  for (const auto& r : rows) {
    tokens[r.n].push_back(r.tokens);
    all_valid &= r.valid;
  }
  std::ostringstream d;
  d << std::fixed << std::setprecision(3);
  bool pass = all_valid;
  double previous = 0;
  for (int n : ns) {
    auto& v = tokens[n];
    std::sort(v.begin(), v.end());
    const double median = static_cast<double>(v[v.size() / 2]);
    d << "n=" << n << " median " << static_cast<long>(median);
    if (previous > 0) {
      const double half = n / 2.0;
      const double ratio = median / previous;
      const double allowed = std::pow(std::log2(n) / std::log2(half), 2) + 0.5;
      pass &= ratio <= allowed;
      d << " (x" << ratio << ", allowed " << allowed << ")";
    }
    d << (n == ns.back() ? "" : "; ");
    previous = median;
  }
  if (!all_valid) d << "; some runs invalid";
  return {pass, d.str()};
}

Outcome oracle_equivalence() {
  testing::Rng rng(8);
  Failures fail;
  long checks = 0;
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 7;
    const PointSet ps = testing::random_point_set(rng, n);
    const int b = ratio_class_bound(n);
    for (Vertex p = 0; p < n; ++p) {
      for (Vertex q = p + 1; q < n; ++q) {
        for (int i = -b; i <= b; ++i) {
          ++checks;
          if (min_points_ratio_rect(ps, p, q, i) != testing::brute_min_points_ratio_rect(ps, p, q, i)) {
            fail.add("instance " + std::to_string(k) + " pair " + std::to_string(p) + "," + std::to_string(q) +
                     " class " + std::to_string(i));
          }
        }
      }
    }
  }
  Outcome o{fail.count() == 0, std::to_string(checks) + " (pair, class) checks on 20 instances"};
  if (fail.count()) o.detail += ", " + fail.summary();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string csv_path;
  std::vector<int> only;
  app.add_option("--csv", csv_path, "Where to write the growth CSV");
  app.add_option("--only", only, "Run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"validity suite", validity_suite},
      {"explicit rectangle bounds", explicit_bounds},
      {"interval-union bound", interval_union_bound},
      {"hierarchy and transformations", hierarchy_properties},
      {"exact-solver fixtures", exact_fixtures},
      {"sparsity", sparsity},
      {"growth report", [&] { return growth_report(csv_path); }},
      {"ratio oracle equivalence", oracle_equivalence},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    if (id == 2 && g_rect_stats.instances == 0 && (only.empty() || std::count(only.begin(), only.end(), 1) == 0)) {
      // The bound check also covers the validity suite's rectangles.
      for (int s = 0; s < 100; ++s) {
        const int t = 2 + s % 2;
        record_rectangle_bounds(
            cli::load_points(cli::generate_instance(cli::Family::Rectangles, spread(s, 3, 32), t, s)), t);
      }
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = seconds_since(start);
    all &= o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << criteria[k].first << ": " << o.detail
              << " [" << std::fixed << std::setprecision(1) << secs << " s]" << std::endl;
  }
  return all ? 0 : 1;
}
