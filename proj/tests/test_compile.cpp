// Copyright 2026 The hamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hamsim/compile.hpp"
#include "json.hpp"
#include "test_util.hpp"

namespace hamsim {
namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << text;
  return path;
}

RunConfig base_config(double t, double eps) {
  RunConfig c;
  c.t = t;
  c.epsilon = eps;
  return c;
}

TEST(RunConfig, Validation) {
  EXPECT_THROW(base_config(0.0, 0.1).validate(), std::invalid_argument);
  EXPECT_THROW(base_config(-1.0, 0.1).validate(), std::invalid_argument);
  EXPECT_THROW(base_config(1.0, 0.0).validate(), std::invalid_argument);
  RunConfig c = base_config(1.0, 0.1);
  c.r = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_NO_THROW(base_config(1.0, 0.1).validate());
}

TEST(CompileHamiltonian, ContinuousVerifies) {
  Rng rng(9);
  const HamiltonianSpec s = testing::random_spec(rng, 3, 6, 3);
  RunConfig c = base_config(0.1, 0.01);
  c.verify = true;
  const CompileResult r = compile_hamiltonian(s, c);
  EXPECT_TRUE(r.verification.ran);
  EXPECT_TRUE(r.verification.passed);
  EXPECT_LE(r.verification.error, 0.005);
  EXPECT_TRUE(r.warnings.empty());
  EXPECT_EQ(r.counts.total(), r.circuit.gates.size());
}

TEST(CompileHamiltonian, ManualRWarns) {
  const HamiltonianSpec s = parse_hamiltonian("n=2\n1 X1 X2\n1 Z1\n");
  RunConfig c = base_config(0.1, 0.01);
  c.r = 3;
  const CompileResult r = compile_hamiltonian(s, c);
  ASSERT_FALSE(r.warnings.empty());
  EXPECT_NE(r.warnings[0].find("r was set by hand"), std::string::npos);
  EXPECT_EQ(r.params.r, 3);
}

TEST(CompileHamiltonian, DropsZeroTermsUnlessAllowed) {
  const HamiltonianSpec s = parse_hamiltonian("n=2\n1 X1\n0 Z2\n");
  RunConfig c = base_config(0.1, 0.01);
  c.chi = 1;
  c.r = 1;
  EXPECT_EQ(compile_hamiltonian(s, c).sorted.m(), 1u);
  c.allow_zero = true;
  EXPECT_EQ(compile_hamiltonian(s, c).sorted.m(), 2u);
  c.allow_zero = false;
  EXPECT_THROW(compile_hamiltonian(parse_hamiltonian("n=1\n0 Z1\n"), c),
               std::invalid_argument);
}

TEST(CompileHamiltonian, NOverride) {
  const HamiltonianSpec s = parse_hamiltonian("n=2\n1 X1 X2\n");
  RunConfig c = base_config(0.1, 0.01);
  c.n_override = 4;
  EXPECT_EQ(compile_hamiltonian(s, c).circuit.n, 4);
  c.n_override = 1;
  EXPECT_THROW(compile_hamiltonian(s, c), std::invalid_argument);
}

TEST(CompileHamiltonian, VerificationSkippedAboveCap) {
  const HamiltonianSpec s = make_honeycomb(1, 2, 1, 1, 1);
  RunConfig c = base_config(0.1, 0.1);
  c.verify = true;
  c.verify_cap = 3;
  const CompileResult r = compile_hamiltonian(s, c);
  EXPECT_FALSE(r.verification.ran);
  EXPECT_NE(r.verification.note.find("skipped"), std::string::npos);
}

TEST(CompileHamiltonian, DiscreteVerifiesUpToPhase) {
  const HamiltonianSpec s = parse_hamiltonian("n=2\n0.5 X1 X2\n0.3 Z1\n");
  RunConfig c = base_config(0.01, 0.1);
  c.verify = true;
  c.gateset = GateSet::kDiscrete;
  c.sk_base_length = 10;
  const CompileResult r = compile_hamiltonian(s, c);
  EXPECT_EQ(r.counts.rz, 0u);
  EXPECT_GT(r.sk_delta, 0.0);
  EXPECT_TRUE(r.verification.phase_invariant);
  EXPECT_TRUE(r.verification.passed) << r.verification.error;
}

TEST(StatsJson, Fields) {
  const HamiltonianSpec s = parse_hamiltonian("n=2\n1 X1 X2\n1 Z1\n");
  RunConfig c = base_config(0.1, 0.01);
  c.seed = 77;
  const CompileResult r = compile_hamiltonian(s, c);
  const auto j = nlohmann::json::parse(stats_json(r, c));
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["seed"], 77);
  EXPECT_EQ(j["gates"]["total"], r.counts.total());
  EXPECT_EQ(j["depth"], r.schedule.depth());
  EXPECT_EQ(j["r"], r.params.r);
  EXPECT_FALSE(j.contains("verification"));
}

TEST(RunCompile, WritesCircuitAndExitCodes) {
  const std::string in = write_temp("hamsim_compile_in.txt", "n=2\n1 X1 X2\n0.5 Y2\n");
  RunConfig c = base_config(0.2, 0.01);
  c.hamiltonian_path = in;
  c.verify = true;
  std::ostringstream out, err;
  EXPECT_EQ(run_compile(c, out, err), kExitOk);
  const GateIR back = parse_circuit(out.str(), 2);
  EXPECT_GT(back.gates.size(), 0u);
  EXPECT_NE(err.str().find("passed"), std::string::npos);

  std::ostringstream out2, err2;
  RunConfig bad = c;
  bad.t = 0;
  EXPECT_EQ(run_compile(bad, out2, err2), kExitUsage);
  bad = c;
  bad.hamiltonian_path = "/nonexistent/file";
  EXPECT_EQ(run_compile(bad, out2, err2), kExitUsage);

  // A hand-picked r that is far too small fails verification.
  RunConfig coarse = c;
  coarse.t = 5.0;
  coarse.r = 1;
  coarse.chi = 1;
  std::ostringstream out3, err3;
  EXPECT_EQ(run_compile(coarse, out3, err3), kExitVerifyFailed);
  std::filesystem::remove(in);
}

TEST(RunCompile, Deterministic) {
  const std::string in =
      write_temp("hamsim_compile_det.txt", serialize_hamiltonian(make_honeycomb(1, 2, 0.3, 0.6, 0.9)));
  RunConfig c = base_config(0.5, 0.05);
  c.hamiltonian_path = in;
  c.stats = true;
  c.layered = true;
  std::ostringstream a, b, e;
  ASSERT_EQ(run_compile(c, a, e), kExitOk);
  ASSERT_EQ(run_compile(c, b, e), kExitOk);
  EXPECT_EQ(a.str(), b.str());
  std::filesystem::remove(in);
}

}  // namespace
}  // namespace hamsim
