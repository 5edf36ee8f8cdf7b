// Copyright 2026 The obsdiam Authors
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

#include "obsdiam/io.hpp"

#include <gtest/gtest.h>

#include <string>

#include "json.hpp"
#include "obsdiam/errors.hpp"
#include "obsdiam/experiments.hpp"
#include "obsdiam/sampling.hpp"

namespace obsdiam {
namespace {

Rational Q(long n, long d = 1) { return ratio(n, d); }

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(MeasureIoTest, ParsesAndRoundTrips) {
  DiscreteMeasure mu = parse_measure(R"({"atoms": [
      {"pos": "1/2", "mass": "0.25"}, {"pos": -3, "mass": "3/4"}]})");
  ASSERT_EQ(mu.size(), 2u);
  EXPECT_EQ(mu.position(0), -3);
  EXPECT_EQ(mu.mass(1), Q(1, 4));
  EXPECT_EQ(parse_measure(measure_to_json(mu)), mu);
}

TEST(MeasureIoTest, RandomRoundTrip) {
  Rng rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    DiscreteMeasure mu = random_measure(rng);
    EXPECT_EQ(parse_measure(measure_to_json(mu)), mu);
  }
}

TEST(MeasureIoTest, SyntaxErrorsCarryLineAndColumn) {
  std::string msg = error_of([] { parse_measure("{\"atoms\": [\n  {\"pos\": 1,,}]}"); });
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(MeasureIoTest, ValidationErrorsCarryPath) {
  std::string msg = error_of([] {
    parse_measure(R"({"atoms": [{"pos": "0", "mass": "1/2"}, {"pos": "1", "mass": "x"}]})");
  });
  EXPECT_NE(msg.find("$.atoms[1].mass"), std::string::npos) << msg;
  msg = error_of([] { parse_measure(R"({"atoms": [{"pos": "0"}]})"); });
  EXPECT_NE(msg.find("$.atoms[0]"), std::string::npos) << msg;
  EXPECT_NE(msg.find("mass"), std::string::npos) << msg;
  msg = error_of([] { parse_measure(R"({"atoms": [{"pos": "0", "mass": "1/2"}]})"); });
  EXPECT_FALSE(msg.empty());
  EXPECT_THROW(parse_measure(R"([])"), ParseError);
}

TEST(SpaceIoTest, RoundTripAndTriangleReport) {
  FiniteMMSpace x = example_space(2, 1);
  FiniteMMSpace y = parse_space(space_to_json(x));
  EXPECT_EQ(y.dist(), x.dist());
  EXPECT_EQ(y.mass(), x.mass());
  EXPECT_EQ(y.labels(), x.labels());
  std::string msg = error_of([] {
    parse_space(R"({"labels": ["p", "q", "r"],
                    "dist": [[0, 1, 5], [1, 0, 1], [5, 1, 0]],
                    "mass": ["1/3", "1/3", "1/3"]})");
  });
  EXPECT_NE(msg.find("triangle"), std::string::npos) << msg;
  msg = error_of([] {
    parse_space(R"({"dist": [[0, 1], [1, "z"]], "mass": ["1/2", "1/2"]})");
  });
  EXPECT_NE(msg.find("$.dist[1][1]"), std::string::npos) << msg;
}

TEST(PlMapIoTest, RoundTripsRandomMaps) {
  Rng rng(62);
  for (int trial = 0; trial < 50; ++trial) {
    PiecewiseLinearMap f = random_one_lipschitz_map(rng);
    EXPECT_EQ(parse_pl_map(pl_map_to_json(f)), f);
  }
  EXPECT_THROW(parse_pl_map(R"({"base_point": "0", "base_value": "0",
      "left_slope": "0", "segments": [{"breakpoint": "1", "slope": "1"}]})"),
               ParseError);
}

TEST(CloudIoTest, RoundTrip) {
  MeasureCloud c{{DiscreteMeasure::point_mass(Q(1, 3)),
                  DiscreteMeasure::uniform(std::vector<Rational>{Q(0), Q(2)})}};
  EXPECT_EQ(parse_cloud(cloud_to_json(c)).members, c.members);
  EXPECT_THROW(parse_cloud("[]"), ParseError);
}

TEST(ReportIoTest, SchemaAndExactValues) {
  CounterexampleReport r = verify_counterexample(2, 1, Q(3, 5));
  auto doc = nlohmann::json::parse(counterexample_to_json(r));
  EXPECT_EQ(doc.at("schema"), 1);
  std::string csv = counterexample_to_csv(r);
  EXPECT_NE(csv.find("2/3"), std::string::npos);
  EXPECT_EQ(csv.find('\n') + 1 < csv.size(), true);
  auto sweep = nlohmann::json::parse(sharpness_to_json(sharpness_sweep(1, 3)));
  EXPECT_EQ(sweep.at("schema"), 1);
  EXPECT_EQ(sweep.at("rows").size(), 2u);
}

TEST(ReportIoTest, Deterministic) {
  CounterexampleReport a = verify_counterexample(2, 1, Q(3, 5));
  CounterexampleReport b = verify_counterexample(2, 1, Q(3, 5));
  EXPECT_EQ(counterexample_to_json(a), counterexample_to_json(b));
}

TEST(FileIoTest, MissingFile) {
  EXPECT_THROW(read_text_file("/nonexistent/obsdiam/file.json"), ParseError);
}

}  // namespace
}  // namespace obsdiam
