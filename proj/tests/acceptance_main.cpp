// Acceptance suite: every criterion runs at its stated tolerance (exact
// rational equality throughout) and prints one pass/fail line. Exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fgd/verify_suite.hpp"
#include "test_support.hpp"

using namespace fgd;
namespace fs = std::filesystem;
namespace tg = fgd::testing;

namespace {

struct Tally {
  long violations = 0;
  long samples = 0;

  void absorb(const CheckResult& r) {
    violations += r.violations;
    samples += r.samples;
  }
};

// R1, R2, D2, C3 plus three seeded random connected graphs.
std::vector<MultiGraph> test_graphs() {
  std::vector<MultiGraph> graphs = {tg::rose1(), tg::rose2(), tg::doubled_edge(),
                                    tg::triangle()};
  Sampler rng(20240);
  while (graphs.size() < 7) {
    MultiGraph g = tg::random_connected_graph(rng);
    validate_graph(g);
    graphs.push_back(std::move(g));
  }
  return graphs;
}

VertexMeasure random_measure(const MultiGraph& g, Sampler& rng) {
  std::vector<Rational> w;
  for (VertexId u = 0; u < g.vertex_count; ++u) w.push_back(rng.positive_rational());
  return VertexMeasure(std::move(w));
}

std::vector<Rational> alternating_sigma(VertexId n) {
  std::vector<Rational> s;
  for (VertexId u = 0; u < n; ++u) s.push_back(u % 2 == 0 ? Rational(1, 2) : Rational(3));
  return s;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FGD_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// --- criteria ---------------------------------------------------------------

bool criterion1_haar_axioms(std::string* detail) {
  Sampler rng(1);
  Tally tally;
  for (const MultiGraph& g : test_graphs()) {
    const Transversal t(g, 0);
    const Section sec = section(t, spanning_tree(g, 0));
    const VertexMeasure uniform =
        VertexMeasure::uniform(g.vertex_count, Rational(1, g.vertex_count));
    for (const VertexMeasure& nu : {uniform, random_measure(g, rng)}) {
      tally.absorb(verify_haar(g, haar_from_base_measure(nu, t, sec), 4, 200, rng));
    }
  }
  *detail = std::to_string(tally.violations) + " violations / " +
            std::to_string(tally.samples) + " checks";
  return tally.violations == 0;
}

bool criterion2_oracle_agreement(std::string* detail) {
  Sampler rng(2);
  Tally tally;
  for (const MultiGraph& g : test_graphs()) {
    const Transversal t(g, 0);
    const SpanningTree tree = spanning_tree(g, 0);
    const Section sec = section(t, tree);
    const DeckAction deck = deck_action(t, tree);
    const VertexMeasure nu = random_measure(g, rng);

    const HaarSystem from_nu = haar_from_base_measure(nu, t, sec);
    const HaarSystem from_lam =
        haar_from_transversal(compose_family(nu, counting_family(t), t), t, sec, deck, 3);
    const HaarSystem oracle = direct_weight_oracle(nu, 0);
    tally.absorb(compare_haar_systems(from_nu, from_lam, g, 4));
    tally.absorb(compare_haar_systems(from_nu, oracle, g, 4));
    tally.absorb(compare_haar_systems(from_lam, oracle, g, 4));
  }
  *detail = std::to_string(tally.violations) + " violations / " +
            std::to_string(tally.samples) + " weights compared";
  return tally.violations == 0;
}

bool criterion3_section_independence(std::string* detail) {
  Sampler rng(3);
  Tally tally;
  for (const MultiGraph& g : test_graphs()) {
    const Transversal t(g, 0);
    const SpanningTree tree = spanning_tree(g, 0);
    tally.absorb(verify_section_independence(random_measure(g, rng), t, tree, 4, rng));
  }
  *detail = std::to_string(tally.violations) + " violations / " +
            std::to_string(tally.samples) + " weights compared";
  return tally.violations == 0;
}

bool criterion4_roundtrip_recovery(std::string* detail) {
  Sampler rng(4);
  long failures = 0;
  long runs = 0;
  for (const MultiGraph& g : test_graphs()) {
    const Transversal t(g, 0);
    const Section sec = section(t, spanning_tree(g, 0));
    const CutoffFn h = normalize_cutoff(cutoff(sec), g.vertex_count);
    const MeasureFamily mu = counting_family(t);
    for (int i = 0; i < 20; ++i) {
      const VertexMeasure nu = random_measure(g, rng);
      ++runs;
      if (recover_base_measure(compose_family(nu, mu, t), h, g.vertex_count) != nu) ++failures;
    }
  }
  *detail = std::to_string(failures) + " failures / " + std::to_string(runs) + " round trips";
  return failures == 0;
}

bool criterion5_figure1_and_quotient(std::string* detail) {
  Tally tally;
  for (const MultiGraph& g : test_graphs()) {
    const EquivalenceBibundle b = make_bibundle(g, 0);
    tally.absorb(verify_figure1(b, 3));
    tally.absorb(verify_quotient_bijection(b, 3));
  }
  *detail = std::to_string(tally.violations) + " violations / " +
            std::to_string(tally.samples) + " checks";
  return tally.violations == 0;
}

bool criterion6_group_case(std::string* detail) {
  Sampler rng(6);
  Tally tally;
  for (int n : {1, 2, 3, 6}) tally.absorb(verify_group_case(n, 4, 50, rng));
  *detail = std::to_string(tally.violations) + " violations / " +
            std::to_string(tally.samples) + " checks";
  return tally.violations == 0;
}

bool criterion7_algebra_iso(std::string* detail) {
  Sampler rng(7);
  Tally tally;
  for (const MultiGraph& g : {tg::doubled_edge(), tg::triangle()}) {
    const std::vector<Rational> ones(static_cast<std::size_t>(g.vertex_count), Rational(1));
    for (const auto& sigma : {ones, alternating_sigma(g.vertex_count)}) {
      tally.absorb(verify_algebra_iso(g, 0, SigmaWeights(sigma), 100, 30, 3, rng));
    }
  }
  *detail = std::to_string(tally.violations) + " violations / " +
            std::to_string(tally.samples) + " checks";
  return tally.violations == 0;
}

struct CliFixture {
  fs::path dir;
  fs::path graph;
  fs::path measure;

  CliFixture() {
    dir = fs::temp_directory_path() /
          ("fgd_acceptance_" + std::to_string(static_cast<long>(::getpid())));
    fs::create_directories(dir);
    graph = dir / "d2.json";
    measure = dir / "d2_measure.json";
    std::ofstream(graph) << R"({"vertices": 2, "edges": [)"
                         << R"({"id":0,"src":0,"dst":1},{"id":1,"src":0,"dst":1}]})";
    std::ofstream(measure) << R"({"base_point": 0, "sigma": {"0": "1", "1": "1"}})";
  }
  ~CliFixture() { std::error_code ec; fs::remove_all(dir, ec); }

  std::string verify_args(const std::string& extra) const {
    return "verify --graph " + graph.string() + " --measure " + measure.string() +
           " --radius 3 --trials 80 --seed 0 " + extra;
  }
};

bool criterion8_mutation_sensitivity(std::string* detail) {
  const CliFixture fx;
  std::string report;
  bool ok = true;

  const int clean = run_cli(fx.verify_args(""));
  ok = ok && clean == 0;
  report += "clean rc=" + std::to_string(clean);
  for (const char* m : {"zero-weight", "double-weight", "skip-reduction", "perturb-family"}) {
    const int rc = run_cli(fx.verify_args(std::string("--mutate ") + m));
    ok = ok && rc == 1;
    report += std::string(", ") + m + " rc=" + std::to_string(rc);
  }
  *detail = report;
  return ok;
}

bool criterion9_determinism(std::string* detail) {
  const CliFixture fx;
  const fs::path out1 = fx.dir / "r1.json";
  const fs::path out2 = fx.dir / "r2.json";
  const int rc1 = run_cli(fx.verify_args("--out " + out1.string()));
  const int rc2 = run_cli(fx.verify_args("--out " + out2.string()));
  const std::string a = slurp(out1);
  const std::string b = slurp(out2);
  const bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
  *detail = "rc=" + std::to_string(rc1) + "/" + std::to_string(rc2) + ", " +
            std::to_string(a.size()) + " bytes" + (a == b ? ", byte-identical" : ", DIFFER");
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    double seconds_limit;
    std::function<bool(std::string*)> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "Haar axiom suite (7 graphs, uniform + random nu, L=4, 200 trials)", 5.0,
       criterion1_haar_axioms},
      {2, "oracle agreement of the three constructions on L=4 balls", 2.0,
       criterion2_oracle_agreement},
      {3, "section independence under translated eta choices", 2.0,
       criterion3_section_independence},
      {4, "base-measure round-trip recovery (20 random nu per graph)", 1.0,
       criterion4_roundtrip_recovery},
      {5, "kinetics diagram commutes and the quotient is arrow-bijective (L=3)", 5.0,
       criterion5_figure1_and_quotient},
      {6, "cycle graphs match the rotation transformation groupoid (n=1,2,3,6)", 3.0,
       criterion6_group_case},
      {7, "matrix trivialization is a *-isomorphism (100 pairs, 30 triples)", 10.0,
       criterion7_algebra_iso},
      {8, "mutation sensitivity through the CLI (four defects, exit 1)", 5.0,
       criterion8_mutation_sensitivity},
      {9, "byte-identical verify reports for a fixed seed", 30.0, criterion9_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(&detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.seconds_limit;
    const bool pass = ok && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s [%s; %.2fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.label,
                detail.c_str(), secs, in_time ? "" : " OVER TIME LIMIT");
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
