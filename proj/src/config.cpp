#include "pielm/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pielm/error.hpp"
#include "pielm/problems.hpp"
#include "pielm/solve.hpp"
#include "pielm/text.hpp"

namespace pielm {

namespace {

const std::set<std::string, std::less<>> kGroupKeys{"domain.hole", "domain.triangle"};

const std::set<std::string, std::less<>> kKnownKeys{
    "problem",        "activation",     "hidden",          "delta",
    "q",              "p",              "lambda",          "rank_tolerance",
    "seed",           "replicates",     "grid",            "weight.interior",
    "weight.value",   "weight.second",  "sweep.parameter", "sweep.values",
    "fdm.resolutions", "domain.kind",   "domain.lo",       "domain.hi",
    "domain.hole",    "domain.holes",   "domain.triangle", "domain.center",
    "domain.radii"};

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::Config, msg); }

std::vector<double> numbers(std::string_view key, const std::string& value) {
  std::vector<double> out;
  for (const auto& field : split(value, ", \t")) {
    double x = 0.0;
    if (!parse_double(field, x)) {
      fail("'" + std::string(key) + "': cannot parse number '" + field + "'");
    }
    out.push_back(x);
  }
  return out;
}

double number(std::string_view key, const std::string& value) {
  double x = 0.0;
  if (!parse_double(value, x)) {
    fail("'" + std::string(key) + "': cannot parse number '" + value + "'");
  }
  return x;
}

long long integer(std::string_view key, const std::string& value) {
  long long x = 0;
  if (!parse_int(value, x)) {
    fail("'" + std::string(key) + "': cannot parse integer '" + value + "'");
  }
  return x;
}

std::vector<int> integers(std::string_view key, const std::string& value) {
  std::vector<int> out;
  for (const auto& field : split(value, ", \t")) {
    out.push_back(static_cast<int>(integer(key, field)));
  }
  return out;
}

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::string join(const Eigen::VectorXd& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_number(v[i]);
  }
  return s;
}

std::vector<std::pair<std::string, std::string>> domain_entries(const Domain& domain) {
  std::vector<std::pair<std::string, std::string>> out;
  auto holes = [&](const std::vector<Hole>& hs) {
    if (hs.empty()) out.emplace_back("domain.holes", "none");
    for (const Hole& h : hs) {
      out.emplace_back("domain.hole", join(h.center) + ", " + format_number(h.radius));
    }
  };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Box>) {
          out.emplace_back("domain.kind", "box");
          out.emplace_back("domain.lo", join(s.lo));
          out.emplace_back("domain.hi", join(s.hi));
        } else if constexpr (std::is_same_v<T, Hexagram>) {
          out.emplace_back("domain.kind", "hexagram");
          out.emplace_back("domain.lo", join(s.lo));
          out.emplace_back("domain.hi", join(s.hi));
          for (const Triangle& t : s.triangles) {
            std::string v;
            for (const auto& p : t.vertices) {
              if (!v.empty()) v += ", ";
              v += join(p);
            }
            out.emplace_back("domain.triangle", v);
          }
        } else if constexpr (std::is_same_v<T, PorousPlate>) {
          out.emplace_back("domain.kind", "porous");
          out.emplace_back("domain.lo", join(s.lo));
          out.emplace_back("domain.hi", join(s.hi));
          holes(s.holes);
        } else if constexpr (std::is_same_v<T, HoledCube>) {
          out.emplace_back("domain.kind", "holedcube");
          out.emplace_back("domain.lo", join(s.lo));
          out.emplace_back("domain.hi", join(s.hi));
          holes(s.holes);
        } else {
          out.emplace_back("domain.kind", "shell");
          out.emplace_back("domain.center", join(s.center));
          out.emplace_back("domain.radii",
                           format_number(s.r_inner) + ", " + format_number(s.r_outer));
        }
      },
      domain.shape());
  return out;
}

bool same_domain(const Domain& a, const Domain& b) {
  return domain_entries(a) == domain_entries(b);
}

std::vector<Hole> parse_holes(const KeyValues& kv, int dim) {
  std::vector<Hole> holes;
  for (const auto& value : kv.get_all("domain.hole")) {
    const auto v = numbers("domain.hole", value);
    if (static_cast<int>(v.size()) != dim + 1) {
      fail("domain.hole: expected " + std::to_string(dim) + " center coordinates and a radius");
    }
    Hole h{Eigen::VectorXd(dim), v.back()};
    for (int k = 0; k < dim; ++k) h.center[k] = v[static_cast<std::size_t>(k)];
    holes.push_back(std::move(h));
  }
  return holes;
}

Domain parse_domain(const KeyValues& kv) {
  const std::string kind = *kv.get("domain.kind");
  auto vec_of = [&](const char* key, std::size_t dim) {
    const auto value = kv.get(key);
    if (!value) fail(std::string(key) + " is required for domain.kind = " + kind);
    const auto v = numbers(key, *value);
    if (v.size() != dim) {
      fail(std::string(key) + ": expected " + std::to_string(dim) + " values");
    }
    return to_vector(v);
  };
  auto box_dim = [&]() -> std::size_t {
    const auto lo = kv.get("domain.lo");
    return lo ? split(*lo, ", \t").size() : 2;
  };
  const bool no_holes = kv.get("domain.holes") == std::optional<std::string>("none");

  if (kind == "box") {
    const auto d = box_dim();
    return Domain::box(vec_of("domain.lo", d), vec_of("domain.hi", d));
  }
  if (kind == "hexagram") {
    const Eigen::Vector2d lo = vec_of("domain.lo", 2), hi = vec_of("domain.hi", 2);
    const auto tris = kv.get_all("domain.triangle");
    if (tris.empty()) return Domain::hexagram(lo, hi);
    if (tris.size() != 2) fail("domain.triangle: give exactly two triangles");
    std::array<Triangle, 2> t;
    for (std::size_t k = 0; k < 2; ++k) {
      const auto v = numbers("domain.triangle", tris[k]);
      if (v.size() != 6) fail("domain.triangle: expected x1, y1, x2, y2, x3, y3");
      for (std::size_t j = 0; j < 3; ++j) t[k].vertices[j] = {v[2 * j], v[2 * j + 1]};
    }
    return Domain::hexagram(lo, hi, t[0], t[1]);
  }
  if (kind == "porous") {
    const Eigen::Vector2d lo = vec_of("domain.lo", 2), hi = vec_of("domain.hi", 2);
    auto holes = parse_holes(kv, 2);
    if (holes.empty() && !no_holes) holes = Domain::default_plate_holes(lo, hi);
    return Domain::porous_plate(lo, hi, std::move(holes));
  }
  if (kind == "holedcube") {
    const Eigen::Vector3d lo = vec_of("domain.lo", 3), hi = vec_of("domain.hi", 3);
    auto holes = parse_holes(kv, 3);
    if (holes.empty() && !no_holes) holes = Domain::default_cube_holes(lo, hi);
    return Domain::holed_cube(lo, hi, std::move(holes));
  }
  if (kind == "shell") {
    const Eigen::Vector3d c =
        kv.has("domain.center") ? Eigen::Vector3d(vec_of("domain.center", 3))
                                : Eigen::Vector3d::Zero();
    const auto r = vec_of("domain.radii", 2);
    return Domain::spherical_shell(c, r[0], r[1]);
  }
  fail("domain.kind: unknown kind '" + kind +
       "' (expected box, hexagram, porous, holedcube or shell)");
}

}  // namespace

KeyValues KeyValues::parse(std::istream& in, std::string_view source) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      fail(std::string(source) + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key(trim(text.substr(0, eq)));
    const std::string value(trim(text.substr(eq + 1)));
    if (!kKnownKeys.count(key)) {
      fail(std::string(source) + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    kv.add(key, value);
  }
  return kv;
}

KeyValues KeyValues::load(const std::string& path) {
  std::ifstream in(path);
  PIELM_THROW_IF(!in, ErrorKind::Io, "cannot open config file '" + path + "'");
  return parse(in, path);
}

void KeyValues::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
}

void KeyValues::set(const std::string& key, std::string value) {
  std::erase_if(entries_, [&](const auto& e) { return e.first == key; });
  add(key, std::move(value));
}

void KeyValues::override_with(const KeyValues& other) {
  std::set<std::string> replaced;
  for (const auto& [key, value] : other.entries_) {
    if (kGroupKeys.count(key) && replaced.insert(key).second) {
      std::erase_if(entries_, [&](const auto& e) { return e.first == key; });
    }
    if (kGroupKeys.count(key)) {
      add(key, value);
    } else {
      set(key, value);
    }
  }
}

std::optional<std::string> KeyValues::get(std::string_view key) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->first == key) return it->second;
  }
  return std::nullopt;
}

std::vector<std::string> KeyValues::get_all(std::string_view key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_) {
    if (k == key) out.push_back(v);
  }
  return out;
}

std::string_view to_string(SweepParameter parameter) {
  return parameter == SweepParameter::Hidden ? "hidden" : "delta";
}

ExperimentConfig ExperimentConfig::defaults_for(std::string_view problem,
                                                ActivationKind activation) {
  const ProblemSpec problem_info = get_problem(problem);
  const auto& ref = problem_info.references.front();
  return ExperimentConfig{
      std::string(problem),
      ref.domain,
      activation,
      problem_info.defaults.hidden,
      ref.delta[activation],
      problem_info.defaults.q_interior,
      problem_info.defaults.p_boundary,
      0.0,
      SolveConfig{}.rank_tolerance,
      0,
      5,
      std::vector<int>(static_cast<std::size_t>(problem_info.dimension), problem_info.defaults.test_grid),
      BlockWeights{},
      std::nullopt,
      {64, 128, 256},
  };
}

void validate(const ExperimentConfig& c) {
  if (c.hidden_n < 1) fail("hidden must be positive");
  if (c.q_interior < 1) fail("q must be positive");
  if (c.p_boundary < 1) fail("p must be positive");
  if (c.replicates < 1) fail("replicates must be positive");
  if (!(c.delta > 0.0)) fail("delta must be positive");
  if (!(c.ridge_lambda >= 0.0)) fail("lambda must be non-negative");
  if (!(c.rank_tolerance > 0.0 && c.rank_tolerance < 1.0)) {
    fail("rank_tolerance must lie in (0, 1)");
  }
  if (static_cast<int>(c.test_grid.size()) != c.domain.dim()) {
    fail("grid: need one resolution per axis (or a single value)");
  }
  for (int n : c.test_grid) {
    if (n < 2) fail("grid: resolution must be at least 2 per axis");
  }
  if (c.sweep) {
    if (c.sweep->values.empty()) fail("sweep.values must not be empty");
    for (double v : c.sweep->values) {
      if (!(v > 0.0)) fail("sweep.values must be positive");
      if (c.sweep->parameter == SweepParameter::Hidden && v != std::floor(v)) {
        fail("sweep.values for hidden must be integers");
      }
    }
  }
  for (int n : c.fdm_resolutions) {
    if (n < 3) fail("fdm.resolutions must be at least 3");
  }
}

ExperimentConfig resolve_config(const KeyValues& kv) {
  const std::string problem = kv.get("problem").value_or("dirichlet-poly2d");
  if (std::find(problem_names().begin(), problem_names().end(), problem) ==
      problem_names().end()) {
    throw Error(ErrorKind::Lookup, "unknown problem '" + problem + "'");
  }
  ActivationKind activation = ActivationKind::Sine;
  if (const auto a = kv.get("activation")) {
    const auto parsed = parse_activation(*a);
    if (!parsed) fail("activation: unknown '" + *a + "' (sine, sigmoid, gaussian, tanh)");
    activation = *parsed;
  }
  ExperimentConfig c = ExperimentConfig::defaults_for(problem, activation);
  const ProblemSpec problem_info = get_problem(problem);

  if (kv.has("domain.kind")) {
    c.domain = parse_domain(kv);
    if (c.domain.dim() != problem_info.dimension) {
      fail("domain dimension does not match problem '" + problem + "'");
    }
    c.delta = 1.0;
    for (const auto& ref : problem_info.references) {
      if (same_domain(ref.domain, c.domain)) c.delta = ref.delta[activation];
    }
  }

  if (auto v = kv.get("hidden")) c.hidden_n = integer("hidden", *v);
  if (auto v = kv.get("delta")) c.delta = number("delta", *v);
  if (auto v = kv.get("q")) c.q_interior = integer("q", *v);
  if (auto v = kv.get("p")) c.p_boundary = integer("p", *v);
  if (auto v = kv.get("lambda")) c.ridge_lambda = number("lambda", *v);
  if (auto v = kv.get("rank_tolerance")) c.rank_tolerance = number("rank_tolerance", *v);
  if (auto v = kv.get("seed")) {
    const long long s = integer("seed", *v);
    if (s < 0) fail("seed must be non-negative");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (auto v = kv.get("replicates")) c.replicates = static_cast<int>(integer("replicates", *v));
  if (auto v = kv.get("grid")) {
    auto g = integers("grid", *v);
    if (g.size() == 1) g.assign(static_cast<std::size_t>(c.domain.dim()), g.front());
    c.test_grid = g;
  } else {
    c.test_grid.assign(static_cast<std::size_t>(c.domain.dim()), problem_info.defaults.test_grid);
  }
  if (auto v = kv.get("weight.interior")) c.weights.interior = number("weight.interior", *v);
  if (auto v = kv.get("weight.value")) c.weights.value = number("weight.value", *v);
  if (auto v = kv.get("weight.second")) c.weights.second = number("weight.second", *v);
  if (auto v = kv.get("fdm.resolutions")) c.fdm_resolutions = integers("fdm.resolutions", *v);

  const auto sweep_param = kv.get("sweep.parameter");
  const auto sweep_values = kv.get("sweep.values");
  if (sweep_param || sweep_values) {
    Sweep s;
    const std::string param = sweep_param.value_or("delta");
    if (param == "hidden") {
      s.parameter = SweepParameter::Hidden;
    } else if (param == "delta") {
      s.parameter = SweepParameter::Delta;
    } else {
      fail("sweep.parameter: expected 'hidden' or 'delta', got '" + param + "'");
    }
    if (sweep_values) s.values = numbers("sweep.values", *sweep_values);
    c.sweep = std::move(s);
  }
  validate(c);
  return c;
}

std::string to_config_text(const ExperimentConfig& c) {
  std::ostringstream out;
  auto line = [&](const std::string& k, const std::string& v) {
    out << k << " = " << v << "\n";
  };
  auto ints = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(v[i]);
    }
    return s;
  };
  line("problem", c.problem);
  for (const auto& [k, v] : domain_entries(c.domain)) line(k, v);
  line("activation", std::string(to_string(c.activation)));
  line("hidden", std::to_string(c.hidden_n));
  line("delta", format_number(c.delta));
  line("q", std::to_string(c.q_interior));
  line("p", std::to_string(c.p_boundary));
  line("lambda", format_number(c.ridge_lambda));
  line("rank_tolerance", format_number(c.rank_tolerance));
  line("seed", std::to_string(c.seed));
  line("replicates", std::to_string(c.replicates));
  line("grid", ints(c.test_grid));
  line("weight.interior", format_number(c.weights.interior));
  line("weight.value", format_number(c.weights.value));
  line("weight.second", format_number(c.weights.second));
  line("fdm.resolutions", ints(c.fdm_resolutions));
  if (c.sweep) {
    line("sweep.parameter", std::string(to_string(c.sweep->parameter)));
    std::string v;
    for (std::size_t i = 0; i < c.sweep->values.size(); ++i) {
      if (i) v += ", ";
      v += format_number(c.sweep->values[i]);
    }
    line("sweep.values", v);
  }
  return out.str();
}

}  // namespace pielm
