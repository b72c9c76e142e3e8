// Copyright 2026 The formula-flow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include "json.hpp"
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun ff(const std::string& args) {
  std::string cmd = std::string(FF_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

TEST(Cli, FaultReport) {
  CliRun r = ff("fault -d 4 -x 1110001100011101");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "F_A=4 F_B=inf F=4")) << r.out;
}

TEST(Cli, ExactResistance) {
  CliRun r = ff("resist -f \"(x1&x2)|(x3&x4)\" -x 1100 --exact");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "2")) << r.out;
  CliRun j = ff("--json resist -f \"(x1&x2)|(x3&x4)\" -x 1100 --exact");
  ASSERT_EQ(j.code, 0) << j.out;
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc.dump().find("\"2\"") != std::string::npos || doc.dump().find(":2") != std::string::npos, true)
      << j.out;
}

TEST(Cli, BackendsAgree) {
  CliRun a = ff("--json resist -f \"x1&(x2|x3)\" -x 111 --exact --backend sp");
  CliRun b = ff("--json resist -f \"x1&(x2|x3)\" -x 111 --exact --backend laplacian");
  ASSERT_EQ(a.code, 0) << a.out;
  ASSERT_EQ(b.code, 0) << b.out;
  auto ja = nlohmann::json::parse(a.out);
  auto jb = nlohmann::json::parse(b.out);
  ja.erase("backend");
  jb.erase("backend");
  EXPECT_EQ(ja, jb);
}

TEST(Cli, ParsePrintsTree) {
  CliRun r = ff("parse -f \"(x1&x2)|x3\"");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "OR")) << r.out;
}

TEST(Cli, JsonOutputsParse) {
  for (const char* args : {"--json parse -f \"x1|x2\"", "--json weights -f \"x1&x2\"",
                           "--json fault -d 2 -x 1100", "--json game -d 2 -x 1100 --seed 1 --reps 5",
                           "--json bounds --family line --n 9 --h 3",
                           "--json product --levels and:4:2,or:2:1",
                           "--json graph -f \"x1&x2\" --format json"}) {
    CliRun r = ff(args);
    ASSERT_EQ(r.code, 0) << args << "\n" << r.out;
    EXPECT_NO_THROW((void)nlohmann::json::parse(r.out)) << args << "\n" << r.out;
  }
}

TEST(Cli, GraphDot) {
  CliRun r = ff("graph -f \"x1&x2\" --format dot");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "graph")) << r.out;
}

TEST(Cli, GameIsReproducible) {
  CliRun a = ff("--json game -d 4 -x 1110001100011101 --seed 5 --reps 20");
  CliRun b = ff("--json game -d 4 -x 1110001100011101 --seed 5 --reps 20 --jobs 1");
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, DomainErrorsExitOne) {
  CliRun r = ff("parse -f \"x1&x1\"");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_TRUE(contains(r.out, "error:")) << r.out;
  EXPECT_EQ(ff("game -d 2 -x 1010 --seed 1").code, 1);
  EXPECT_EQ(ff("kfault -d 2 -k 2 -x 1111").code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(ff("parse").code, 2);
  EXPECT_EQ(ff("no-such-command").code, 2);
  EXPECT_EQ(ff("game -d 2 -x 1100").code, 2);  // seed is required
}

TEST(Cli, VerifySingleCriterion) {
  CliRun r = ff("verify --suite 5");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "PASS")) << r.out;
}

}  // namespace
