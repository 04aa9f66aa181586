#include "fgd/errors.hpp"

namespace fgd {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::disconnected: return "Disconnected";
    case Errc::dangling_edge: return "DanglingEdge";
    case Errc::bad_base_point: return "BadBasePoint";
    case Errc::non_concatenable: return "NonConcatenable";
    case Errc::not_composable: return "NotComposable";
    case Errc::incompatible_action: return "IncompatibleAction";
    case Errc::bibundle_invalid: return "BibundleInvalid";
    case Errc::not_fully_supported: return "NotFullySupported";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::bad_translator: return "BadTranslator";
    case Errc::not_cutoff: return "NotCutoff";
    case Errc::ambient_mismatch: return "AmbientMismatch";
    case Errc::provenance_mismatch: return "ProvenanceMismatch";
    case Errc::not_invariant: return "NotInvariant";
  }
  return "Unknown";
}

}  // namespace fgd
