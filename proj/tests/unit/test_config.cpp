#include <gtest/gtest.h>

#include <sstream>

#include "pielm/config.hpp"
#include "pielm/error.hpp"
#include "pielm/problems.hpp"

using namespace pielm;

namespace {

KeyValues parse(const std::string& text) {
  std::istringstream in(text);
  return KeyValues::parse(in, "test");
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no pielm::Error thrown";
  return ErrorKind::ContractViolation;
}

}  // namespace

TEST(Config, ParseLinesAndComments) {
  const KeyValues kv = parse(
      "# comment\n"
      "\n"
      "problem = navier-porous2d   # trailing\n"
      "  hidden=400\n"
      "domain.hole = 1, 2, 0.1\n"
      "domain.hole = 3, 4, 0.2\n"
      "hidden = 500\n");
  EXPECT_EQ(kv.get("problem"), "navier-porous2d");
  EXPECT_EQ(kv.get("hidden"), "500");
  EXPECT_EQ(kv.get_all("domain.hole").size(), 2u);
  EXPECT_FALSE(kv.has("delta"));
}

TEST(Config, ParseErrors) {
  EXPECT_EQ(kind_of([] { parse("hidden 400\n"); }), ErrorKind::Config);
  EXPECT_EQ(kind_of([] { parse("hiden = 400\n"); }), ErrorKind::Config);
  EXPECT_EQ(kind_of([] { KeyValues::load("/nonexistent/dir/x.cfg"); }), ErrorKind::Io);
}

TEST(Config, Defaults) {
  const ExperimentConfig c = resolve_config(KeyValues{});
  EXPECT_EQ(c.problem, "dirichlet-poly2d");
  EXPECT_EQ(c.domain.describe(), "box[-1:1]x[-1:1]");
  EXPECT_EQ(c.activation, ActivationKind::Sine);
  EXPECT_EQ(c.hidden_n, 1000);
  EXPECT_EQ(c.delta, 8.0);
  EXPECT_EQ(c.q_interior, 10000);
  EXPECT_EQ(c.p_boundary, 4000);
  EXPECT_EQ(c.ridge_lambda, 0.0);
  EXPECT_EQ(c.rank_tolerance, std::numeric_limits<double>::epsilon());
  EXPECT_EQ(c.replicates, 5);
  EXPECT_EQ(c.test_grid, (std::vector<int>{128, 128}));
  EXPECT_FALSE(c.sweep.has_value());

  const ExperimentConfig shell = resolve_config(parse("problem = navier-shell3d\n"));
  EXPECT_EQ(shell.hidden_n, 2000);
  EXPECT_EQ(shell.test_grid, (std::vector<int>{32, 32, 32}));
  EXPECT_EQ(shell.delta, 4.0);
}

TEST(Config, DeltaFollowsMatchingReferenceDomain) {
  const auto c = resolve_config(parse("domain.kind = box\ndomain.lo = 0, 0\ndomain.hi = 5, 5\n"));
  EXPECT_EQ(c.delta, 5.0);
  const auto t = resolve_config(
      parse("activation = tanh\ndomain.kind = box\ndomain.lo = 5, 0\ndomain.hi = 15, 10\n"));
  EXPECT_EQ(t.delta, 0.12);
  const auto other =
      resolve_config(parse("domain.kind = box\ndomain.lo = 0, 0\ndomain.hi = 2, 2\n"));
  EXPECT_EQ(other.delta, 1.0);
  const auto porous = resolve_config(parse(
      "problem = navier-porous2d\ndomain.kind = porous\ndomain.lo = 0, 0\ndomain.hi = 4, 4pi\n"));
  EXPECT_EQ(porous.delta, 1.2);
  EXPECT_EQ(porous.domain.describe(), get_problem("navier-porous2d").references[1].domain.describe());
}

TEST(Config, ExplicitValuesOverride) {
  const auto c = resolve_config(parse(
      "problem = navier-sinsq2d\nactivation = gaussian\nhidden = 300\ndelta = 2.5\nq = 900\n"
      "p = 120\nlambda = 1e-6\nseed = 42\nreplicates = 3\ngrid = 16, 20\n"
      "weight.interior = 0.5\nfdm.resolutions = 16, 32\n"));
  EXPECT_EQ(c.activation, ActivationKind::Gaussian);
  EXPECT_EQ(c.hidden_n, 300);
  EXPECT_EQ(c.delta, 2.5);
  EXPECT_EQ(c.q_interior, 900);
  EXPECT_EQ(c.p_boundary, 120);
  EXPECT_EQ(c.ridge_lambda, 1e-6);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.replicates, 3);
  EXPECT_EQ(c.test_grid, (std::vector<int>{16, 20}));
  EXPECT_EQ(c.weights.interior, 0.5);
  EXPECT_EQ(c.fdm_resolutions, (std::vector<int>{16, 32}));
}

TEST(Config, ValidationErrors) {
  for (const char* bad :
       {"hidden = 0\n", "q = -3\n", "delta = 0\n", "lambda = -1\n", "replicates = 0\n",
        "grid = 1\n", "grid = 8, 8, 8\n", "sweep.parameter = delta\n",
        "sweep.parameter = width\nsweep.values = 1\n", "sweep.parameter = hidden\nsweep.values = 1.5\n",
        "activation = relu\n", "hidden = many\n", "domain.kind = torus\n",
        "domain.kind = box\ndomain.lo = 0, 0, 0\ndomain.hi = 1, 1, 1\n", "seed = -1\n"}) {
    EXPECT_EQ(kind_of([&] { resolve_config(parse(bad)); }), ErrorKind::Config) << bad;
  }
  EXPECT_EQ(kind_of([] { resolve_config(parse("problem = nope\n")); }), ErrorKind::Lookup);
  EXPECT_EQ(kind_of([] {
              resolve_config(parse("problem = navier-porous2d\ndomain.kind = porous\n"
                                   "domain.lo = 0, 0\ndomain.hi = 1, 1\n"
                                   "domain.hole = 0.95, 0.5, 0.1\n"));
            }),
            ErrorKind::GeometryDegenerate);
}

TEST(Config, Sweep) {
  const auto c = resolve_config(parse("sweep.parameter = hidden\nsweep.values = 100, 200, 400\n"));
  ASSERT_TRUE(c.sweep.has_value());
  EXPECT_EQ(c.sweep->parameter, SweepParameter::Hidden);
  EXPECT_EQ(c.sweep->values, (std::vector<double>{100, 200, 400}));
}

TEST(Config, GroupOverrideReplacesWholeGroup) {
  KeyValues base = parse(
      "problem = navier-porous2d\ndomain.kind = porous\ndomain.lo = 0, 0\ndomain.hi = 4, 4\n"
      "domain.hole = 1, 1, 0.2\ndomain.hole = 3, 3, 0.2\nhidden = 100\n");
  KeyValues over;
  over.add("domain.hole", "2, 2, 0.5");
  over.add("hidden", "50");
  base.override_with(over);
  EXPECT_EQ(base.get_all("domain.hole"), (std::vector<std::string>{"2, 2, 0.5"}));
  EXPECT_EQ(base.get("hidden"), "50");
  const auto c = resolve_config(base);
  EXPECT_EQ(c.domain.describe(), "porous[0:4]x[0:4]-1holes");
}

TEST(Config, TextRoundTrip) {
  const char* inputs[] = {
      "",
      "problem = navier-porous2d\nactivation = tanh\nseed = 9\n",
      "problem = dirichlet-hexagram2d\ndomain.kind = hexagram\ndomain.lo = 0, pi\n"
      "domain.hi = 3pi, 2pi\nsweep.parameter = delta\nsweep.values = 1, 2.5, 4\n",
      "problem = dirichlet-holes3d\nlambda = 1e-8\ngrid = 10, 11, 12\n",
      "problem = navier-shell3d\ndomain.kind = shell\ndomain.center = 0.5, 0, 0\n"
      "domain.radii = 0.3, 1.5\n",
      "problem = navier-porous2d\ndomain.kind = porous\ndomain.lo = 0, 0\n"
      "domain.hi = 2, 2\ndomain.holes = none\n",
  };
  for (const char* in : inputs) {
    const ExperimentConfig c = resolve_config(parse(in));
    const std::string text = to_config_text(c);
    const ExperimentConfig back = resolve_config(parse(text));
    EXPECT_EQ(to_config_text(back), text) << in;
    EXPECT_EQ(back.domain.describe(), c.domain.describe());
    EXPECT_EQ(back.delta, c.delta);
  }
}
