#include "pielm/error.hpp"

namespace pielm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ContractViolation: return "contract violation";
    case ErrorKind::InvalidHyperparameter: return "invalid hyperparameter";
    case ErrorKind::GeometryDegenerate: return "degenerate geometry";
    case ErrorKind::Undercoverage: return "boundary undercoverage";
    case ErrorKind::UnsupportedGeometry: return "unsupported geometry";
    case ErrorKind::Specification: return "problem specification";
    case ErrorKind::Data: return "invalid data";
    case ErrorKind::DegenerateSystem: return "degenerate system";
    case ErrorKind::Lookup: return "lookup";
    case ErrorKind::UndefinedMetric: return "undefined metric";
    case ErrorKind::Config: return "configuration";
    case ErrorKind::Io: return "i/o";
  }
  return "unknown";
}

}  // namespace pielm
