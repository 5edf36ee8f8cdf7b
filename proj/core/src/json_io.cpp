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

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "obsdiam/errors.hpp"

namespace obsdiam {
namespace {

using json = nlohmann::ordered_json;

json parse_document(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(std::string(what) + ": syntax error at line " +
                     std::to_string(line) + ", column " + std::to_string(column));
  }
}

[[noreturn]] void invalid(std::string_view what, const std::string& path,
                          const std::string& message) {
  throw ParseError(std::string(what) + ": " + path + ": " + message);
}

Rational rational_at(const json& node, std::string_view what,
                     const std::string& path) {
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const ParseError& e) {
      invalid(what, path, e.what());
    }
  }
  if (node.is_number_integer()) return parse_rational(node.dump());
  invalid(what, path, "expected a rational string");
}

const json& member(const json& node, const char* key, std::string_view what,
                   const std::string& path) {
  if (!node.is_object() || !node.contains(key)) {
    invalid(what, path, std::string("missing key '") + key + "'");
  }
  return node.at(key);
}

DiscreteMeasure measure_from(const json& doc, std::string_view what,
                             const std::string& root) {
  const json& atoms = member(doc, "atoms", what, root);
  if (!atoms.is_array()) invalid(what, root + ".atoms", "expected an array");
  std::vector<Atom> out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string path = root + ".atoms[" + std::to_string(i) + "]";
    out.push_back({rational_at(member(atoms[i], "pos", what, path), what, path + ".pos"),
                   rational_at(member(atoms[i], "mass", what, path), what,
                               path + ".mass")});
  }
  try {
    return DiscreteMeasure(std::move(out));
  } catch (const DomainError& e) {
    invalid(what, root, e.what());
  }
}

json measure_json(const DiscreteMeasure& mu) {
  json atoms = json::array();
  for (const Atom& a : mu.atoms()) {
    atoms.push_back({{"pos", to_string(a.pos)}, {"mass", to_string(a.mass)}});
  }
  return {{"atoms", atoms}};
}

json certified_json(const CertifiedValue& v) {
  json out = {{"exact", v.is_exact()},
              {"lower", to_string(v.lower)},
              {"upper", to_string(v.upper)},
              {"display", v.to_string()}};
  if (v.is_exact()) {
    out["value"] = to_string(v.lower);
    out["decimal"] = to_decimal(v.lower);
  } else {
    out["decimal"] = "[" + to_decimal(v.lower) + ", " + to_decimal(v.upper) + "]";
  }
  return out;
}

json values_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

DiscreteMeasure parse_measure(std::string_view text) {
  return measure_from(parse_document(text, "measure"), "measure", "$");
}

std::string measure_to_json(const DiscreteMeasure& mu) {
  return measure_json(mu).dump(2) + "\n";
}

FiniteMMSpace parse_space(std::string_view text) {
  constexpr std::string_view kWhat = "mm-space";
  const json doc = parse_document(text, kWhat);
  const json& dist = member(doc, "dist", kWhat, "$");
  const json& mass = member(doc, "mass", kWhat, "$");
  if (!dist.is_array()) invalid(kWhat, "$.dist", "expected an array of rows");
  if (!mass.is_array()) invalid(kWhat, "$.mass", "expected an array");
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc.at("labels");
    if (!l.is_array()) invalid(kWhat, "$.labels", "expected an array");
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string()) {
        invalid(kWhat, "$.labels[" + std::to_string(i) + "]", "expected a string");
      }
      labels.push_back(l[i].get<std::string>());
    }
  }
  std::vector<std::vector<Rational>> d;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const std::string row_path = "$.dist[" + std::to_string(i) + "]";
    if (!dist[i].is_array()) invalid(kWhat, row_path, "expected an array");
    std::vector<Rational> row;
    for (std::size_t j = 0; j < dist[i].size(); ++j) {
      row.push_back(rational_at(dist[i][j], kWhat,
                                row_path + "[" + std::to_string(j) + "]"));
    }
    d.push_back(std::move(row));
  }
  std::vector<Rational> m;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    m.push_back(rational_at(mass[i], kWhat, "$.mass[" + std::to_string(i) + "]"));
  }
  try {
    return FiniteMMSpace(std::move(labels), std::move(d), std::move(m));
  } catch (const DomainError& e) {
    invalid(kWhat, "$", e.what());
  }
}

std::string space_to_json(const FiniteMMSpace& space) {
  json dist = json::array();
  for (const auto& row : space.dist()) dist.push_back(values_json(row));
  json doc = {{"labels", space.labels()},
              {"dist", dist},
              {"mass", values_json(space.mass())}};
  return doc.dump(2) + "\n";
}

PiecewiseLinearMap parse_pl_map(std::string_view text) {
  constexpr std::string_view kWhat = "PL map";
  const json doc = parse_document(text, kWhat);
  const Rational base_point =
      rational_at(member(doc, "base_point", kWhat, "$"), kWhat, "$.base_point");
  const Rational base_value =
      rational_at(member(doc, "base_value", kWhat, "$"), kWhat, "$.base_value");
  const Rational left =
      rational_at(member(doc, "left_slope", kWhat, "$"), kWhat, "$.left_slope");
  const json& segs = member(doc, "segments", kWhat, "$");
  if (!segs.is_array() || segs.empty()) {
    invalid(kWhat, "$.segments", "expected a nonempty array");
  }
  std::vector<PiecewiseLinearMap::Segment> segments;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string path = "$.segments[" + std::to_string(i) + "]";
    segments.push_back(
        {rational_at(member(segs[i], "breakpoint", kWhat, path), kWhat,
                     path + ".breakpoint"),
         rational_at(member(segs[i], "slope", kWhat, path), kWhat, path + ".slope")});
  }
  if (segments.front().breakpoint != base_point) {
    invalid(kWhat, "$.segments[0]", "first breakpoint must equal base_point");
  }
  try {
    return PiecewiseLinearMap::from_segments(base_value, left, segments);
  } catch (const DomainError& e) {
    invalid(kWhat, "$", e.what());
  }
}

std::string pl_map_to_json(const PiecewiseLinearMap& f) {
  json segs = json::array();
  for (const auto& s : f.segments()) {
    segs.push_back({{"breakpoint", to_string(s.breakpoint)},
                    {"slope", to_string(s.slope)}});
  }
  json doc = {{"schema", kReportSchema},
              {"base_point", to_string(f.base_point())},
              {"base_value", to_string(f.base_value())},
              {"left_slope", to_string(f.left_slope())},
              {"segments", segs}};
  return doc.dump(2) + "\n";
}

MeasureCloud parse_cloud(std::string_view text) {
  const json doc = parse_document(text, "cloud");
  if (!doc.is_array() || doc.empty()) {
    invalid("cloud", "$", "expected a nonempty array of measures");
  }
  MeasureCloud cloud;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    cloud.members.push_back(
        measure_from(doc[i], "cloud", "$[" + std::to_string(i) + "]"));
  }
  return cloud;
}

std::string cloud_to_json(const MeasureCloud& cloud) {
  json doc = json::array();
  for (const auto& m : cloud.members) doc.push_back(measure_json(m));
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string od_to_json(const FiniteMMSpace& space, const Screen& screen,
                       const Rational& kappa, const OdResult& result) {
  json doc = {{"schema", kReportSchema},
              {"kind", "observable_diameter"},
              {"points", space.size()},
              {"screen", screen.to_string()},
              {"kappa", to_string(kappa)},
              {"od", certified_json(result.value)},
              {"witness", values_json(result.witness.values)},
              {"orders_examined", result.orders_examined}};
  return doc.dump(2) + "\n";
}

std::string counterexample_to_json(const CounterexampleReport& r) {
  json doc = {{"schema", kReportSchema},
              {"kind", "counterexample"},
              {"N", r.n},
              {"R", to_string(r.radius)},
              {"kappa", to_string(r.kappa)},
              {"in_window", r.in_window},
              {"interval", r.interval.to_string()},
              {"od_full_line", certified_json(r.od_full_line)},
              {"od_interval", certified_json(r.od_interval)},
              {"expected_c", to_string(r.expected_c)},
              {"full_line_witness", values_json(r.full_line_witness.values)},
              {"interval_witness", values_json(r.interval_witness.values)},
              {"full_line_matches", r.full_line_matches},
              {"interval_matches", r.interval_matches},
              {"passed", r.passed()}};
  if (r.original_inequality_refuted) {
    doc["original_inequality_refuted"] = *r.original_inequality_refuted;
  }
  return doc.dump(2) + "\n";
}

std::string sharpness_to_json(const SharpnessSweep& sweep) {
  json rows = json::array();
  for (const auto& row : sweep.rows) {
    rows.push_back({{"n", row.n},
                    {"kappa", to_string(row.kappa)},
                    {"interval_diameter", to_string(row.interval_diameter)},
                    {"od_full_line", to_string(row.od_full_line)},
                    {"od_interval", to_string(row.od_interval)},
                    {"ratio", to_string(row.ratio)},
                    {"ratio_exceeds_one", row.ratio_exceeds_one()},
                    {"gap", to_string(row.gap)},
                    {"provenance", to_string(row.provenance)}});
  }
  json doc = {{"schema", kReportSchema},
              {"kind", "sharpness"},
              {"R", to_string(sweep.radius)},
              {"limsup_bound", to_string(2 * sweep.radius)},
              {"spot_check_passed", sweep.spot_check_passed},
              {"rows", rows},
              {"passed", sweep.passed()}};
  return doc.dump(2) + "\n";
}

std::string profile_to_json(const SemicontinuityProfile& p) {
  json rows = json::array();
  for (const auto& row : p.rows) {
    rows.push_back({{"kappa", to_string(row.kappa)}, {"od", certified_json(row.od)}});
  }
  json jumps = json::array();
  for (const auto& j : p.jumps) {
    jumps.push_back({{"kappa", to_string(j.kappa)},
                     {"at", to_string(j.at)},
                     {"right", to_string(j.right)},
                     {"right_continuous", j.right_continuous}});
  }
  json doc = {{"schema", kReportSchema},
              {"kind", "semicontinuity_profile"},
              {"rows", rows},
              {"monotone", p.monotone},
              {"jumps", jumps},
              {"passed", p.passed()}};
  return doc.dump(2) + "\n";
}

std::string suite_to_json(const SuiteReport& r) {
  json doc = {{"schema", kReportSchema},
              {"kind", "property_suite"},
              {"suite", r.name},
              {"cases", r.cases},
              {"failures", r.failures},
              {"skipped", r.skipped},
              {"diagnostics", r.diagnostics},
              {"passed", r.passed()}};
  return doc.dump(2) + "\n";
}

std::string counterexample_to_csv(const CounterexampleReport& r) {
  std::ostringstream out;
  out << "N,R,kappa,in_window,interval_lo,interval_hi,od_full_line,od_interval,"
         "expected_c,full_line_matches,interval_matches,passed\n";
  out << r.n << ',' << to_string(r.radius) << ',' << to_string(r.kappa) << ','
      << csv_bool(r.in_window) << ',' << to_string(r.interval.lo()) << ','
      << to_string(r.interval.hi()) << ',' << r.od_full_line.to_string() << ','
      << r.od_interval.to_string() << ',' << to_string(r.expected_c) << ','
      << csv_bool(r.full_line_matches) << ',' << csv_bool(r.interval_matches)
      << ',' << csv_bool(r.passed()) << '\n';
  return out.str();
}

std::string sharpness_to_csv(const SharpnessSweep& sweep) {
  std::ostringstream out;
  out << "n,kappa,interval_diameter,od_full_line,od_interval,ratio,gap,"
         "provenance\n";
  for (const auto& row : sweep.rows) {
    out << row.n << ',' << to_string(row.kappa) << ','
        << to_string(row.interval_diameter) << ',' << to_string(row.od_full_line)
        << ',' << to_string(row.od_interval) << ',' << to_string(row.ratio)
        << ',' << to_string(row.gap) << ',' << to_string(row.provenance) << '\n';
  }
  return out.str();
}

std::string profile_to_csv(const SemicontinuityProfile& p) {
  std::ostringstream out;
  out << "kappa,od_lower,od_upper\n";
  for (const auto& row : p.rows) {
    out << to_string(row.kappa) << ',' << to_string(row.od.lower) << ','
        << to_string(row.od.upper) << '\n';
  }
  return out.str();
}

}  // namespace obsdiam
