// Copyright 2026 The hessco Authors
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

#include "hessco/mps.h"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <sstream>

#include "hessco/catalog.h"
#include "hessco/error.h"
#include "hessco/model_builder.h"
#include "hessco/simplex.h"
#include "oracles.h"
#include "test_support.h"

namespace hessco {
namespace {

ModelInstance Tiny() {
  ModelInstance m;
  m.set_name("tiny");
  const int x = m.AddColumn("x", 0.0, 4.0);
  m.AddObjective(x, 2.0);
  m.AddObjectiveConstant(1.0);
  m.AddRow("c1", RowFamily::kGeneric, Sense::kGreaterEqual, 1.0, {{x, 1.0}});
  return m;
}

std::string Write(const ModelInstance& m) {
  std::ostringstream out;
  WriteMps(m, out);
  return out.str();
}

ModelInstance Read(const std::string& text) {
  std::istringstream in(text);
  return ReadMps(in, "t.mps");
}

TEST(MpsTest, TinyModelMatchesGoldenFile) {
  const std::string golden =
      testing::ReadFile(std::string(HESSCO_TEST_DATA) + "/tiny.mps");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(Write(Tiny()), golden);
  const ModelInstance back =
      ReadMpsFile(std::string(HESSCO_TEST_DATA) + "/tiny.mps");
  EXPECT_TRUE(back.SameStructure(Tiny()));
  EXPECT_NEAR(Solve(back).objective, 3.0, 1e-12);
}

TEST(MpsTest, DesignModelRoundTripsExactly) {
  const DesignModel m = BuildDesignModel(testing::DemoProblem(6, 2, {"B", "S", "F"}));
  const ModelInstance back = Read(Write(m.lp));
  EXPECT_TRUE(back.SameStructure(m.lp));
  EXPECT_EQ(Write(back), Write(m.lp));
}

TEST(MpsTest, BoundKindsAndAwkwardNumbersRoundTrip) {
  ModelInstance m;
  m.AddColumn("free", -HUGE_VAL, HUGE_VAL);
  m.AddColumn("minus", -HUGE_VAL, 3.0);
  m.AddColumn("fixed", 0.1 + 0.2, 0.1 + 0.2);
  m.AddColumn("negative", -2.0, -1e-300);
  m.AddColumn("shifted", 1.0 / 3.0, HUGE_VAL);
  m.AddColumn("unused", 0.0, 1.0);
  m.AddObjective(0, 1e17);
  m.AddRow("r", RowFamily::kGeneric, Sense::kEqual, -2.5e-8,
           {{0, 1.0 / 7.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}, {4, 1.0}});
  const ModelInstance back = Read(Write(m));
  EXPECT_TRUE(back.SameStructure(m));
}

TEST(MpsTest, RejectsUnsupportedSectionsWithLineNumbers) {
  const std::string ranges =
      "NAME r\nROWS\n N OBJ\n L c\nCOLUMNS\n x c 1\nRHS\nRANGES\n R c 1\nENDATA\n";
  try {
    Read(ranges);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 9);
    EXPECT_NE(std::string(e.what()).find("t.mps:9"), std::string::npos);
  }
  const std::string marker =
      "NAME m\nROWS\n N OBJ\nCOLUMNS\n M 'MARKER' 'INTORG'\nENDATA\n";
  EXPECT_THROW(Read(marker), ParseError);
  const std::string empty_ranges =
      "NAME r\nROWS\n N OBJ\n L c\nCOLUMNS\n x c 1\nRHS\nRANGES\nBOUNDS\nENDATA\n";
  EXPECT_EQ(Read(empty_ranges).num_rows(), 1);
  const std::string unknown_row =
      "NAME u\nROWS\n N OBJ\nCOLUMNS\n x nope 1\nENDATA\n";
  try {
    Read(unknown_row);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5);
  }
  EXPECT_THROW(Read("NAME x\nROWS\n N OBJ\n"), ParseError);
  EXPECT_THROW(ReadMpsFile("/nonexistent/file.mps"), ParseError);
}

TEST(MpsTest, MonthModelExportsQuickly) {
  DesignProblem p = testing::FlatProblem(60, 30, 0.1, 1.0, 0.3);
  p.sources = CaseStudySources();
  p.storage = CaseStudyCatalog().entries();
  const DesignModel m = BuildDesignModel(p);
  testing::TempDir dir;
  const auto start = std::chrono::steady_clock::now();
  ExportMps(m.lp, dir.File("month.mps"));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  EXPECT_LT(seconds, 5.0);
  EXPECT_TRUE(ReadMpsFile(dir.File("month.mps")).SameStructure(m.lp));
}

}  // namespace
}  // namespace hessco
