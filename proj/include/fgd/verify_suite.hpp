#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "fgd/convalg.hpp"
#include "fgd/io.hpp"

namespace fgd {

// Corruption hooks for the mutation-sensitivity tests. Each one must make
// the verification suite report at least one violation.
enum class Mutation {
  none,
  zero_weight,     // one Haar weight forced to zero
  double_weight,   // one Haar weight doubled
  skip_reduction,  // groupoid composition stops reducing words
  perturb_family,  // one counting-family value bumped
};

std::optional<Mutation> mutation_from_name(const std::string& name);
const char* mutation_name(Mutation m);

struct SuiteConfig {
  int radius = 4;
  int trials = 200;
  std::uint64_t seed = 0;
  Mutation mutation = Mutation::none;
};

struct SuiteReport {
  nlohmann::ordered_json body;
  long violations = 0;
};

// The measure file resolved against a graph: base point, the base measure
// nu, and the square-root weights when the file supplied sigma.
struct ResolvedMeasure {
  VertexId base = 0;
  VertexMeasure nu;
  std::optional<SigmaWeights> sigma;
};

ResolvedMeasure resolve_measure(const MultiGraph& g, const MeasureInput& m);

// The full verification suite: groupoid axioms, Haar axioms, construction
// agreement, section independence, base-measure round trip, the commuting
// kinetics/quotient diagram, quotient bijectivity, family equivariance, the
// algebra isomorphism, and the group case on cycle graphs. Deterministic
// for a fixed config.
SuiteReport run_verify_suite(const MultiGraph& g, const MeasureInput& m, const SuiteConfig& cfg);

// Report of the constructed Haar system: per-fiber ball weights, the
// section table and the fundamental-group generators.
nlohmann::ordered_json haar_report(const MultiGraph& g, const MeasureInput& m, int radius);

// Stand-alone reports for the iso and group-case subcommands.
SuiteReport iso_report(const MultiGraph& g, const MeasureInput& m, int radius, int trials,
                       std::uint64_t seed);
SuiteReport group_case_report(int n, int radius, int trials, std::uint64_t seed);

}  // namespace fgd
