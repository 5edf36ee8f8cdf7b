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

#ifndef OBSDIAM_IO_HPP_
#define OBSDIAM_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "obsdiam/compress.hpp"
#include "obsdiam/experiments.hpp"
#include "obsdiam/measure.hpp"
#include "obsdiam/mmspace.hpp"
#include "obsdiam/observable_diameter.hpp"
#include "obsdiam/pl_map.hpp"
#include "obsdiam/prokhorov.hpp"
#include "obsdiam/property_suites.hpp"

namespace obsdiam {

// Version stamped into every report object as "schema".
inline constexpr int kReportSchema = 1;

// File formats. Rationals are JSON strings ("p/q", "p" or decimals); plain
// JSON integers are accepted on input. Readers throw ParseError with the
// line/column of syntax errors or the JSON path of invalid content.
//
//   measure: {"atoms": [{"pos": "p/q", "mass": "p/q"}, ...]}
//   mm-space: {"labels": [...], "dist": [[...], ...], "mass": [...]}
//   PL map:  {"schema": 1, "base_point": x, "base_value": y,
//             "left_slope": s, "segments": [{"breakpoint": x, "slope": s}]}
//   cloud:   [measure, measure, ...]
DiscreteMeasure parse_measure(std::string_view text);
std::string measure_to_json(const DiscreteMeasure& mu);

FiniteMMSpace parse_space(std::string_view text);
std::string space_to_json(const FiniteMMSpace& space);

PiecewiseLinearMap parse_pl_map(std::string_view text);
std::string pl_map_to_json(const PiecewiseLinearMap& f);

MeasureCloud parse_cloud(std::string_view text);
std::string cloud_to_json(const MeasureCloud& cloud);

// Throws ParseError if the file cannot be read.
std::string read_text_file(const std::string& path);

// Report objects (pretty-printed JSON with "schema": 1).
std::string od_to_json(const FiniteMMSpace& space, const Screen& screen,
                       const Rational& kappa, const OdResult& result);
std::string counterexample_to_json(const CounterexampleReport& r);
std::string sharpness_to_json(const SharpnessSweep& sweep);
std::string profile_to_json(const SemicontinuityProfile& p);
std::string suite_to_json(const SuiteReport& r);

// CSV with a fixed header line; columns are listed in the README.
std::string counterexample_to_csv(const CounterexampleReport& r);
std::string sharpness_to_csv(const SharpnessSweep& sweep);
std::string profile_to_csv(const SemicontinuityProfile& p);

}  // namespace obsdiam

#endif  // OBSDIAM_IO_HPP_
