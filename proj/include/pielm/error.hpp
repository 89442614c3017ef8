#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pielm {

enum class ErrorKind {
  ContractViolation,
  InvalidHyperparameter,
  GeometryDegenerate,
  Undercoverage,
  UnsupportedGeometry,
  Specification,
  Data,
  DegenerateSystem,
  Lookup,
  UndefinedMetric,
  Config,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception. Every failure raised by pielm carries a kind so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

#define PIELM_THROW_IF(cond, kind, msg)                                        \
  do {                                                                         \
    if (cond) throw ::pielm::Error((kind), (msg));                             \
  } while (0)

}  // namespace pielm
