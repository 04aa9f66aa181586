#pragma once

#include <stdexcept>
#include <string>

namespace fgd {

enum class Errc {
  empty_graph,
  disconnected,
  dangling_edge,
  bad_base_point,
  non_concatenable,
  not_composable,
  incompatible_action,
  bibundle_invalid,
  not_fully_supported,
  not_invertible,
  bad_translator,
  not_cutoff,
  ambient_mismatch,
  provenance_mismatch,
  not_invariant,
};

const char* errc_name(Errc c);

// Domain failures (invalid graph, non-composable arrows, degenerate
// measures, ...). IO and usage problems are reported separately by the CLI.
class DomainError : public std::runtime_error {
public:
  DomainError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

}  // namespace fgd
