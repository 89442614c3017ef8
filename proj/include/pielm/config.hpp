#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pielm/activation.hpp"
#include "pielm/assembly.hpp"
#include "pielm/geometry.hpp"

namespace pielm {

/// Ordered key = value entries. Repeated keys are allowed; scalar lookups
/// return the last occurrence, group keys (domain.hole) return all of them.
class KeyValues {
public:
  /// Parses "key = value" lines; '#' starts a comment, blank lines are skipped.
  static KeyValues parse(std::istream& in, std::string_view source = "<input>");
  static KeyValues load(const std::string& path);

  void add(std::string key, std::string value);
  /// Replaces every entry for `key` with a single value.
  void set(const std::string& key, std::string value);
  /// Merges `other` on top: scalar keys override, and a group key present in
  /// `other` replaces the whole group.
  void override_with(const KeyValues& other);

  std::optional<std::string> get(std::string_view key) const;
  std::vector<std::string> get_all(std::string_view key) const;
  bool has(std::string_view key) const { return get(key).has_value(); }

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

enum class SweepParameter { Hidden, Delta };

struct Sweep {
  SweepParameter parameter = SweepParameter::Delta;
  std::vector<double> values;
};

struct ExperimentConfig {
  std::string problem;
  Domain domain;
  ActivationKind activation = ActivationKind::Sine;
  Eigen::Index hidden_n = 1000;
  double delta = 1.0;
  Eigen::Index q_interior = 10000;
  Eigen::Index p_boundary = 4000;
  double ridge_lambda = 0.0;
  double rank_tolerance = 0.0;  // filled from SolveConfig's default
  std::uint64_t seed = 0;
  int replicates = 5;
  std::vector<int> test_grid;
  BlockWeights weights;
  std::optional<Sweep> sweep;
  std::vector<int> fdm_resolutions{64, 128, 256};

  /// Problem defaults: first reference domain, its delta for `activation`,
  /// and the problem's collocation sizes.
  static ExperimentConfig defaults_for(std::string_view problem,
                                       ActivationKind activation = ActivationKind::Sine);
};

/// Builds a validated config. Unset keys fall back to the problem defaults;
/// when the domain matches a reference domain its delta is used.
ExperimentConfig resolve_config(const KeyValues& kv);

/// Key = value text that resolve_config maps back to the same config.
std::string to_config_text(const ExperimentConfig& config);

/// Throws a Config error when counts are not positive, the sweep is empty, etc.
void validate(const ExperimentConfig& config);

std::string_view to_string(SweepParameter parameter);

}  // namespace pielm
