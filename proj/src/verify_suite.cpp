#include "fgd/verify_suite.hpp"

#include <algorithm>
#include <map>

namespace fgd {

using nlohmann::ordered_json;

std::optional<Mutation> mutation_from_name(const std::string& name) {
  if (name.empty() || name == "none") return Mutation::none;
  if (name == "zero-weight") return Mutation::zero_weight;
  if (name == "double-weight") return Mutation::double_weight;
  if (name == "skip-reduction") return Mutation::skip_reduction;
  if (name == "perturb-family") return Mutation::perturb_family;
  return std::nullopt;
}

const char* mutation_name(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::zero_weight: return "zero-weight";
    case Mutation::double_weight: return "double-weight";
    case Mutation::skip_reduction: return "skip-reduction";
    case Mutation::perturb_family: return "perturb-family";
  }
  return "none";
}

ResolvedMeasure resolve_measure(const MultiGraph& g, const MeasureInput& m) {
  ResolvedMeasure out;
  out.base = m.base_point;
  if (!g.has_vertex(out.base))
    throw DomainError(Errc::bad_base_point, "base point out of range");
  if (m.sigma) {
    if (static_cast<VertexId>(m.sigma->size()) != g.vertex_count)
      throw DomainError(Errc::ambient_mismatch, "sigma table size != vertex count");
    out.sigma = SigmaWeights(*m.sigma);
    out.nu = out.sigma->nu();
  } else {
    if (static_cast<VertexId>(m.nu->size()) != g.vertex_count)
      throw DomainError(Errc::ambient_mismatch, "nu table size != vertex count");
    out.nu = VertexMeasure(*m.nu);
  }
  out.nu.require_fully_supported();
  return out;
}

namespace {

// Deterministic mutation target: the smallest non-unit arrow into `base`,
// searched over growing radii. Empty only for an edgeless graph.
std::optional<Arrow> mutation_target(const MultiGraph& g, VertexId base) {
  for (int radius = 1; radius <= std::max(2, g.vertex_count); ++radius) {
    for (const Arrow& a : Transversal(g, base).ball(radius))
      if (!a.is_unit()) return a;
  }
  return std::nullopt;
}

HaarSystem mutate_weight(HaarSystem h, const Arrow& target, bool to_zero) {
  auto base_weight = h.weight;
  const VertexId tw = target.range();
  h.weight = [base_weight, target, tw, to_zero](VertexId w, const Arrow& a) {
    Rational v = base_weight(w, a);
    if (w == tw && a == target) return to_zero ? Rational(0) : v * Rational(2);
    return v;
  };
  return h;
}

MeasureFamily perturb_family(MeasureFamily mu, const Arrow& target) {
  auto base_at = mu.at;
  mu.at = [base_at, target](VertexId u) {
    ArrowMeasure m = base_at(u);
    if (u != target.source()) return m;
    return ArrowMeasure(
        [m, target](const Arrow& a) {
          Rational v = m.weight(a);
          return a == target ? v + Rational(1) : v;
        },
        [m](const Arrow& a) { return m.in_ambient(a); }, m.ambient_desc());
  };
  return mu;
}

CheckResult roundtrip_check(const MultiGraph& g, const Transversal& t, const Section& sec,
                            const VertexMeasure& nu, int extra_random, Sampler& rng) {
  CheckResult r;
  r.name = "roundtrip_recovery";
  const CutoffFn h = normalize_cutoff(cutoff(sec), g.vertex_count);
  const MeasureFamily mu = counting_family(t);

  auto run_one = [&](const VertexMeasure& candidate) {
    const ArrowMeasure lam = compose_family(candidate, mu, t);
    r.count(recover_base_measure(lam, h, g.vertex_count) == candidate,
            "recovered base measure differs");
  };
  run_one(nu);
  for (int i = 0; i < extra_random; ++i) {
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(g.vertex_count));
    for (VertexId u = 0; u < g.vertex_count; ++u) w.push_back(rng.positive_rational());
    run_one(VertexMeasure(std::move(w)));
  }
  return r;
}

ordered_json check_to_json(const CheckResult& c) {
  ordered_json j;
  j["name"] = c.name;
  j["violations"] = c.violations;
  j["samples"] = c.samples;
  j["notes"] = c.notes;
  return j;
}

ordered_json graph_summary(const MultiGraph& g) {
  ordered_json j;
  j["vertices"] = g.vertex_count;
  j["edges"] = g.edge_count();
  j["pi1_rank"] = pi1_rank(g);
  return j;
}

ordered_json section_table(const Section& sec) {
  ordered_json j = ordered_json::object();
  for (std::size_t u = 0; u < sec.to_base.size(); ++u)
    j[std::to_string(u)] = to_string(sec.to_base[u]);
  return j;
}

ordered_json system_fibers(const MultiGraph& g, const HaarSystem& h, int radius) {
  ordered_json j = ordered_json::object();
  for (VertexId w = 0; w < g.vertex_count; ++w) {
    ordered_json fiber = ordered_json::array();
    for (const Arrow& delta : Transversal(g, w).ball(radius)) {
      ordered_json entry;
      entry["arrow"] = to_string(delta);
      entry["weight"] = h.weight(w, delta).str();
      fiber.push_back(entry);
    }
    j[std::to_string(w)] = fiber;
  }
  return j;
}

}  // namespace

SuiteReport run_verify_suite(const MultiGraph& g, const MeasureInput& m, const SuiteConfig& cfg) {
  validate_graph(g);
  const ResolvedMeasure rm = resolve_measure(g, m);
  Sampler rng(cfg.seed);

  const Transversal t(g, rm.base);
  const SpanningTree tree = spanning_tree(g, rm.base);
  const Section sec = section(t, tree);
  const EquivalenceBibundle bib = make_bibundle(g, rm.base);
  validate_bibundle(bib, std::min(cfg.radius, 2));

  const std::optional<Arrow> target = mutation_target(g, rm.base);

  std::vector<CheckResult> checks;
  // A check that rejects its own input mid-run has found an inconsistency;
  // record it as a violation instead of aborting the suite.
  auto guarded = [&checks](const std::string& name, auto&& fn) {
    try {
      checks.push_back(fn());
    } catch (const DomainError& e) {
      CheckResult r;
      r.name = name;
      r.count(false, std::string("aborted: ") + e.what());
      checks.push_back(std::move(r));
    }
  };

  // Groupoid axioms (where un-reduced composition shows up).
  const int axiom_radius = std::min(cfg.radius, 2);
  guarded("groupoid_axioms", [&] {
    return cfg.mutation == Mutation::skip_reduction
               ? check_axioms(UnreducedPi1View(g), axiom_radius)
               : check_axioms(Pi1View(g), axiom_radius);
  });
  guarded("quotient_groupoid_axioms", [&] {
    CheckResult qa = check_axioms(QuotientGroupoid(bib), axiom_radius);
    qa.name = "quotient_groupoid_axioms";
    return qa;
  });

  // The Haar system under test.
  HaarSystem system = haar_from_base_measure(rm.nu, t, sec);
  if (target && cfg.mutation == Mutation::zero_weight)
    system = mutate_weight(system, *target, true);
  if (target && cfg.mutation == Mutation::double_weight)
    system = mutate_weight(system, *target, false);
  guarded("haar_axioms", [&] { return verify_haar(g, system, cfg.radius, cfg.trials, rng); });

  // Construction agreement: base-measure route, transversal route, oracle.
  guarded("construction_agreement", [&] {
    CheckResult agree;
    agree.name = "construction_agreement";
    const ArrowMeasure lam = compose_family(rm.nu, counting_family(t), t);
    const HaarSystem via_transversal =
        haar_from_transversal(lam, t, sec, bib.deck, std::min(cfg.radius, 3));
    const HaarSystem oracle = direct_weight_oracle(rm.nu, rm.base);
    agree.merge(compare_haar_systems(system, via_transversal, g, cfg.radius));
    agree.merge(compare_haar_systems(system, oracle, g, cfg.radius));
    const ArrowMeasure restricted = transversal_from_haar(system, t);
    const HaarSystem roundtrip =
        haar_from_transversal(restricted, t, sec, bib.deck, std::min(cfg.radius, 3));
    agree.merge(compare_haar_systems(system, roundtrip, g, cfg.radius));
    return agree;
  });

  guarded("section_independence",
          [&] { return verify_section_independence(rm.nu, t, tree, cfg.radius, rng); });
  guarded("roundtrip_recovery", [&] { return roundtrip_check(g, t, sec, rm.nu, 5, rng); });
  guarded("figure1_commutes", [&] { return verify_figure1(bib, std::min(cfg.radius, 3)); });
  guarded("quotient_bijection", [&] { return verify_quotient_bijection(bib, std::min(cfg.radius, 3)); });

  guarded("family_equivariance", [&] {
    MeasureFamily family = counting_family(t);
    if (target && cfg.mutation == Mutation::perturb_family)
      family = perturb_family(family, *target);
    return check_equivariance(family, bib.deck, t, std::min(cfg.radius, 3), cfg.trials / 4,
                              rng);
  });

  guarded("algebra_isomorphism", [&] {
    const int pairs = std::max(1, cfg.trials / 4);
    const int triples = std::max(1, cfg.trials / 8);
    const int algebra_radius = std::min(cfg.radius, 3);
    return rm.sigma
               ? verify_algebra_iso(g, rm.base, *rm.sigma, pairs, triples, algebra_radius, rng)
               : verify_algebra_mult(g, rm.base, rm.nu, pairs, triples, algebra_radius, rng);
  });

  guarded("pair_groupoid_haar", [&] {
    return verify_pair_haar(PairGroupoid(g.vertex_count), rm.nu, cfg.trials / 4, rng);
  });

  if (const auto cyc = detect_cycle(g)) {
    guarded("group_case",
            [&] { return verify_group_case(g, *cyc, cfg.radius, cfg.trials / 4, rng); });
  }

  SuiteReport out;
  out.body["command"] = "verify";
  ordered_json config;
  config["base_point"] = rm.base;
  config["radius"] = cfg.radius;
  config["trials"] = cfg.trials;
  config["seed"] = cfg.seed;
  config["mutate"] = mutation_name(cfg.mutation);
  out.body["config"] = config;
  out.body["graph"] = graph_summary(g);
  out.body["section"] = section_table(sec);
  ordered_json gens = ordered_json::array();
  for (const Arrow& rho : bib.deck.generators) gens.push_back(to_string(rho));
  out.body["pi1_generators"] = gens;

  ordered_json checks_json = ordered_json::array();
  for (const CheckResult& c : checks) {
    checks_json.push_back(check_to_json(c));
    out.violations += c.violations;
  }
  out.body["checks"] = checks_json;

  ordered_json system_json;
  system_json["provenance"] = provenance_name(system.provenance);
  system_json["base_point"] = system.base;
  system_json["fibers"] = system_fibers(g, system, std::min(cfg.radius, 2));
  out.body["system"] = system_json;
  out.body["violations_total"] = out.violations;
  return out;
}

ordered_json haar_report(const MultiGraph& g, const MeasureInput& m, int radius) {
  validate_graph(g);
  const ResolvedMeasure rm = resolve_measure(g, m);
  const Transversal t(g, rm.base);
  const SpanningTree tree = spanning_tree(g, rm.base);
  const Section sec = section(t, tree);
  const HaarSystem system = haar_from_base_measure(rm.nu, t, sec);

  ordered_json out;
  out["command"] = "haar";
  out["graph"] = graph_summary(g);
  ordered_json nu = ordered_json::object();
  for (VertexId u = 0; u < g.vertex_count; ++u) nu[std::to_string(u)] = rm.nu.at(u).str();
  out["nu"] = nu;
  out["base_point"] = rm.base;
  out["provenance"] = provenance_name(system.provenance);
  out["section"] = section_table(sec);
  ordered_json gens = ordered_json::array();
  for (const Arrow& rho : pi1_generators(t, tree)) gens.push_back(to_string(rho));
  out["pi1_generators"] = gens;
  out["fibers"] = system_fibers(g, system, radius);
  return out;
}

SuiteReport iso_report(const MultiGraph& g, const MeasureInput& m, int radius, int trials,
                       std::uint64_t seed) {
  validate_graph(g);
  const ResolvedMeasure rm = resolve_measure(g, m);
  Sampler rng(seed);
  const int triples = std::max(1, trials * 3 / 10);
  CheckResult c = rm.sigma ? verify_algebra_iso(g, rm.base, *rm.sigma, trials, triples,
                                                std::min(radius, 3), rng)
                           : verify_algebra_mult(g, rm.base, rm.nu, trials, triples,
                                                 std::min(radius, 3), rng);
  SuiteReport out;
  out.violations = c.violations;
  out.body["command"] = "iso";
  out.body["mode"] = rm.sigma ? "sigma_symmetric" : "nu_right";
  out.body["base_point"] = rm.base;
  out.body["checks"] = ordered_json::array({check_to_json(c)});
  out.body["violations_total"] = c.violations;
  return out;
}

SuiteReport group_case_report(int n, int radius, int trials, std::uint64_t seed) {
  Sampler rng(seed);
  CheckResult c = verify_group_case(n, radius, trials, rng);
  SuiteReport out;
  out.violations = c.violations;
  out.body["command"] = "group-case";
  out.body["n"] = n;
  out.body["radius"] = radius;
  out.body["checks"] = ordered_json::array({check_to_json(c)});
  out.body["violations_total"] = c.violations;
  return out;
}

}  // namespace fgd
