// Command-line front end: loads graph and measure files, builds Haar
// systems, runs the verification suite, and emits deterministic JSON
// reports. Exit codes: 0 pass, 1 domain failure or violation, 2 usage/IO.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fgd/verify_suite.hpp"

namespace {

struct Options {
  std::string graph_path;
  std::string measure_path;
  std::optional<int> base;
  int radius = 4;
  int trials = 200;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string mutate = "none";
  int n = 1;  // group-case order
};

int emit(const nlohmann::ordered_json& body, const std::string& out_path) {
  const std::string text = body.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

fgd::MeasureInput resolved_measure_input(const Options& opt) {
  fgd::MeasureInput m = fgd::load_measure(opt.measure_path);
  if (opt.base) m.base_point = *opt.base;
  return m;
}

int cmd_validate(const Options& opt) {
  const fgd::MultiGraph g = fgd::load_graph(opt.graph_path);
  nlohmann::ordered_json body;
  body["command"] = "validate";
  try {
    fgd::validate_graph(g);
    body["valid"] = true;
    body["vertices"] = g.vertex_count;
    body["edges"] = g.edge_count();
    body["pi1_rank"] = fgd::pi1_rank(g);
    return emit(body, opt.out_path);
  } catch (const fgd::DomainError& e) {
    body["valid"] = false;
    body["error"] = fgd::errc_name(e.code());
    body["detail"] = e.what();
    emit(body, opt.out_path);
    return 1;
  }
}

int cmd_haar(const Options& opt) {
  const fgd::MultiGraph g = fgd::load_graph(opt.graph_path);
  const auto body = fgd::haar_report(g, resolved_measure_input(opt), opt.radius);
  return emit(body, opt.out_path);
}

int cmd_verify(const Options& opt) {
  const fgd::MultiGraph g = fgd::load_graph(opt.graph_path);
  const auto mutation = fgd::mutation_from_name(opt.mutate);
  if (!mutation) {
    std::cerr << "error: unknown mutation '" << opt.mutate << "'\n";
    return 2;
  }
  fgd::SuiteConfig cfg;
  cfg.radius = opt.radius;
  cfg.trials = opt.trials;
  cfg.seed = opt.seed;
  cfg.mutation = *mutation;
  const fgd::SuiteReport rep = fgd::run_verify_suite(g, resolved_measure_input(opt), cfg);
  const int rc = emit(rep.body, opt.out_path);
  if (rc != 0) return rc;
  return rep.violations == 0 ? 0 : 1;
}

int cmd_iso(const Options& opt) {
  const fgd::MultiGraph g = fgd::load_graph(opt.graph_path);
  const fgd::SuiteReport rep =
      fgd::iso_report(g, resolved_measure_input(opt), opt.radius, opt.trials, opt.seed);
  const int rc = emit(rep.body, opt.out_path);
  if (rc != 0) return rc;
  return rep.violations == 0 ? 0 : 1;
}

int cmd_group_case(const Options& opt) {
  const fgd::SuiteReport rep = fgd::group_case_report(opt.n, opt.radius, opt.trials, opt.seed);
  const int rc = emit(rep.body, opt.out_path);
  if (rc != 0) return rc;
  return rep.violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Haar systems on fundamental groupoids of finite multigraphs"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_graph, bool needs_measure) {
    if (needs_graph) sub->add_option("--graph", opt.graph_path, "graph JSON file")->required();
    if (needs_measure)
      sub->add_option("--measure", opt.measure_path, "measure JSON file")->required();
    sub->add_option("--base", opt.base, "base point override");
    sub->add_option("--radius", opt.radius, "ball radius")->check(CLI::NonNegativeNumber);
    sub->add_option("--trials", opt.trials, "randomized trial count")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "sampler seed");
    sub->add_option("--out", opt.out_path, "write the report here instead of stdout");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a graph file");
  add_common(validate, true, false);

  CLI::App* haar = app.add_subcommand("haar", "build a Haar system and report its weights");
  add_common(haar, true, true);

  CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
  add_common(verify, true, true);
  verify->add_option("--mutate", opt.mutate,
                     "inject a defect: zero-weight, double-weight, skip-reduction, "
                     "perturb-family");

  CLI::App* iso = app.add_subcommand("iso", "verify the matrix trivialization");
  add_common(iso, true, true);

  CLI::App* group_case = app.add_subcommand("group-case", "cycle graph vs transformation groupoid");
  add_common(group_case, false, false);
  group_case->add_option("--n", opt.n, "cycle length")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(opt);
    if (app.got_subcommand(haar)) return cmd_haar(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(iso)) return cmd_iso(opt);
    if (app.got_subcommand(group_case)) return cmd_group_case(opt);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const fgd::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
