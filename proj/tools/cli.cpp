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

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "obsdiam/compress.hpp"
#include "obsdiam/errors.hpp"
#include "obsdiam/experiments.hpp"
#include "obsdiam/io.hpp"
#include "obsdiam/measure.hpp"
#include "obsdiam/mmspace.hpp"
#include "obsdiam/observable_diameter.hpp"
#include "obsdiam/prokhorov.hpp"
#include "obsdiam/property_suites.hpp"
#include "obsdiam/rational.hpp"

namespace obsdiam::cli {
namespace {

using json = nlohmann::ordered_json;

enum class Format { kText, kJson, kCsv };

struct Settings {
  std::string format = "text";
  std::string tol = "1/1000000000";
  std::size_t cap_n = kDefaultExactCap;
  bool approx = false;
  std::uint64_t seed = 1;

  Format fmt() const {
    if (format == "json") return Format::kJson;
    if (format == "csv") return Format::kCsv;
    return Format::kText;
  }

  OdOptions od_options() const {
    OdOptions o;
    o.exact = !approx;
    o.tol = parse_rational(tol);
    if (o.tol <= 0) throw DomainError("--tol must be positive");
    if (cap_n == 0) throw DomainError("--cap-n must be positive");
    o.cap_n = cap_n;
    return o;
  }
};

Rational flag_rational(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return read_text_file(path);
}

std::string exact_and_decimal(const Rational& v) {
  return to_string(v) + " (decimal " + to_decimal(v) + ")";
}

std::string certified_text(const CertifiedValue& v) {
  if (v.is_exact()) {
    return to_string(v.lower) + " (exact, decimal " + to_decimal(v.lower) + ")";
  }
  return v.to_string() + " (certified interval, decimal [" + to_decimal(v.lower) +
         ", " + to_decimal(v.upper) + "])";
}

std::string values_text(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += to_string(values[i]);
  }
  return out;
}

const char* ok(bool b) { return b ? "OK" : "FAILED"; }

void unsupported_csv(const char* command) {
  throw DomainError(std::string(command) + " has no CSV output; use text or json");
}

// ---- pd -------------------------------------------------------------------

int cmd_pd(const std::string& file, const std::string& alpha_text,
           const Settings& s, std::ostream& out) {
  const DiscreteMeasure mu = parse_measure(read_input(file));
  const Rational alpha = flag_rational(alpha_text, "--alpha");
  const PartialDiameter pd = partial_diameter(mu, alpha);
  if (s.fmt() == Format::kCsv) unsupported_csv("pd");
  if (s.fmt() == Format::kJson) {
    json doc = {{"schema", kReportSchema},
                {"kind", "partial_diameter"},
                {"alpha", to_string(alpha)},
                {"value", to_string(pd.value)},
                {"decimal", to_decimal(pd.value)}};
    if (pd.witness) {
      doc["window"] = {to_string(mu.position(pd.witness->first)),
                       to_string(mu.position(pd.witness->last))};
    } else {
      doc["window"] = nullptr;
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << to_string(pd.value) << "\n";
  out << "decimal: " << to_decimal(pd.value) << "\n";
  if (pd.witness) {
    out << "window: [" << to_string(mu.position(pd.witness->first)) << ", "
        << to_string(mu.position(pd.witness->last)) << "]\n";
  }
  return kOk;
}

// ---- compress -------------------------------------------------------------

int cmd_compress(const std::string& file, const std::string& alpha_text,
                 const std::string& radius_text, const std::string& output,
                 const Settings& s, std::ostream& out) {
  const DiscreteMeasure mu = parse_measure(read_input(file));
  const Rational alpha = flag_rational(alpha_text, "--alpha");
  const Rational radius = flag_rational(radius_text, "--radius");
  const PiecewiseLinearMap f = clamp_construct(mu, alpha, radius);

  const Rational pd_mu = partial_diameter(mu, alpha).value;
  const Rational pd_image = partial_diameter(push_forward(mu, f), alpha).value;
  const Rational target = min(radius, pd_mu);
  const bool pd_ok = pd_image == target;
  const bool lipschitz_ok = f.is_one_lipschitz();
  const Rational bound = radius / alpha;
  const std::optional<Rational> lo = f.infimum();
  const std::optional<Rational> hi = f.supremum();
  const bool range_ok = lo && hi && *lo >= -bound && *hi <= bound;
  const bool all_ok = pd_ok && lipschitz_ok && range_ok;

  const std::string map_json = pl_map_to_json(f);
  if (!output.empty()) {
    std::ofstream file_out(output);
    if (!file_out) throw ParseError("cannot write '" + output + "'");
    file_out << map_json;
  }

  if (s.fmt() == Format::kCsv) unsupported_csv("compress");
  if (s.fmt() == Format::kJson) {
    json doc = {{"schema", kReportSchema},
                {"kind", "compression"},
                {"alpha", to_string(alpha)},
                {"R", to_string(radius)},
                {"map", json::parse(map_json)},
                {"pd_mu", to_string(pd_mu)},
                {"pd_image", to_string(pd_image)},
                {"pd_ok", pd_ok},
                {"one_lipschitz", lipschitz_ok},
                {"range", lo && hi ? json{to_string(*lo), to_string(*hi)} : json()},
                {"range_bound", to_string(bound)},
                {"range_ok", range_ok},
                {"passed", all_ok}};
    out << doc.dump(2) << "\n";
  } else {
    if (output.empty()) out << map_json;
    out << "pd = " << to_string(pd_image);
    if (pd_mu == 0) {
      out << ": " << ok(pd_ok) << "\n";
    } else {
      out << " = min{" << to_string(radius) << "," << to_string(pd_mu)
          << "}: " << ok(pd_ok) << "\n";
    }
    out << "range: sup|f| = "
        << (lo && hi ? to_string(max(abs(*lo), abs(*hi))) : std::string("unbounded"))
        << " <= R/alpha = " << to_string(bound) << ": " << ok(range_ok) << "\n";
    out << "1-Lipschitz: " << ok(lipschitz_ok) << "\n";
  }
  return all_ok ? kOk : kVerificationFailed;
}

// ---- od / grid-od ---------------------------------------------------------

int cmd_od(const std::string& file, const std::string& screen_text,
           const std::string& kappa_text, const Settings& s, std::ostream& out,
           std::ostream& err) {
  const FiniteMMSpace space = parse_space(read_input(file));
  const Screen screen = Screen::parse(screen_text);
  const Rational kappa = flag_rational(kappa_text, "--kappa");
  OdResult r;
  try {
    r = observable_diameter(space, screen, kappa, s.od_options());
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n"
        << "hint: raise --cap-n, or use 'grid-od' (n <= 4) for a certified "
           "lower bound\n";
    return kResourceCap;
  }
  const std::string violation = r.witness.violation(space, screen);
  const bool witness_ok =
      violation.empty() && witness_partial_diameter(space, r.witness, kappa) == r.value.lower;
  if (!witness_ok) {
    err << "error: witness failed re-validation"
        << (violation.empty() ? std::string() : ": " + violation) << "\n";
  }
  if (s.fmt() == Format::kCsv) unsupported_csv("od");
  if (s.fmt() == Format::kJson) {
    out << od_to_json(space, screen, kappa, r);
  } else {
    out << "od(X, " << screen.to_string() << "; -" << to_string(kappa)
        << ") = " << certified_text(r.value) << "\n";
    out << "witness: " << values_text(r.witness.values) << "\n";
    out << "witness check: " << ok(witness_ok) << "\n";
    out << "orders examined: " << r.orders_examined << "\n";
  }
  return witness_ok ? kOk : kVerificationFailed;
}

int cmd_grid_od(const std::string& file, const std::string& screen_text,
                const std::string& kappa_text, const std::string& step_text,
                std::size_t cap, const Settings& s, std::ostream& out) {
  const FiniteMMSpace space = parse_space(read_input(file));
  const Screen screen = Screen::parse(screen_text);
  if (!screen.bounded()) throw DomainError("grid-od needs an interval screen");
  const Rational kappa = flag_rational(kappa_text, "--kappa");
  const Rational step = flag_rational(step_text, "--step");
  if (step <= 0) throw DomainError("--step must be positive");
  const Rational value = od_grid_oracle(space, screen, kappa, step, cap);
  const Rational slack = Rational(static_cast<long>(space.size()) - 1) * step;
  if (s.fmt() == Format::kCsv) unsupported_csv("grid-od");
  if (s.fmt() == Format::kJson) {
    json doc = {{"schema", kReportSchema},
                {"kind", "grid_oracle"},
                {"screen", screen.to_string()},
                {"kappa", to_string(kappa)},
                {"step", to_string(step)},
                {"lower_bound", to_string(value)},
                {"upper_bound", to_string(Rational(value + slack))},
                {"decimal", to_decimal(value)}};
    out << doc.dump(2) << "\n";
  } else {
    out << "grid od(X, " << screen.to_string() << "; -" << to_string(kappa)
        << ") >= " << exact_and_decimal(value) << "\n";
    out << "exact value within [" << to_string(value) << ", "
        << to_string(Rational(value + slack)) << "]\n";
  }
  return kOk;
}

// ---- counterexample / sharpness -------------------------------------------

int cmd_counterexample(int n, const std::string& radius_text,
                       const std::string& kappa_text, const Settings& s,
                       std::ostream& out) {
  const Rational radius = flag_rational(radius_text, "R");
  const Rational kappa =
      kappa_text.empty() ? family_default_kappa(n) : flag_rational(kappa_text, "kappa");
  const CounterexampleReport r = verify_counterexample(n, radius, kappa, s.od_options());
  switch (s.fmt()) {
    case Format::kJson:
      out << counterexample_to_json(r);
      break;
    case Format::kCsv:
      out << counterexample_to_csv(r);
      break;
    case Format::kText: {
      out << "X_" << n << ": " << 2 * n << " points, R = " << to_string(radius)
          << ", kappa = " << to_string(kappa) << " ("
          << (r.in_window ? "inside" : "outside") << " [1-1/N, 1-1/(2N)))\n";
      out << "od(X; -kappa) = " << certified_text(r.od_full_line) << ", expected "
          << to_string(radius) << ": " << ok(r.full_line_matches) << "\n";
      out << "od(X, " << r.interval.to_string()
          << "; -kappa) = " << certified_text(r.od_interval) << ", expected "
          << to_string(Rational(r.expected_c * radius)) << ": "
          << ok(r.interval_matches) << "\n";
      if (r.original_inequality_refuted) {
        out << "min{2R, od(X; -kappa)} > od(X, [-R, R]; -kappa): "
            << (*r.original_inequality_refuted ? "refuted" : "not refuted") << " ("
            << r.od_full_line.to_string() << " vs " << r.od_interval.to_string()
            << ")\n";
      }
      out << (r.passed() ? "PASS" : "FAIL") << " (" << r.od_full_line.to_string()
          << ", " << r.od_interval.to_string() << ")\n";
      break;
    }
  }
  return r.passed() ? kOk : kVerificationFailed;
}

int cmd_sharpness(const std::string& radius_text, int n_max, const Settings& s,
                  std::ostream& out) {
  const Rational radius = flag_rational(radius_text, "R");
  const SharpnessSweep sweep = sharpness_sweep(radius, n_max, s.od_options());
  switch (s.fmt()) {
    case Format::kJson:
      out << sharpness_to_json(sweep);
      break;
    case Format::kCsv:
      out << sharpness_to_csv(sweep);
      break;
    case Format::kText:
      out << "n  kappa_n  od_full  od_interval  ratio  gap  source\n";
      for (const SharpnessRow& row : sweep.rows) {
        out << row.n << "  " << to_string(row.kappa) << "  "
            << to_string(row.od_full_line) << "  " << to_string(row.od_interval)
            << "  " << to_string(row.ratio) << "  " << to_string(row.gap) << "  "
            << to_string(row.provenance) << "\n";
      }
      out << (sweep.passed() ? "PASS" : "FAIL") << ": ratio > 1 and gap = 2R = "
          << to_string(Rational(2 * radius)) << " on every row\n";
      break;
  }
  return sweep.passed() ? kOk : kVerificationFailed;
}

// ---- proptest -------------------------------------------------------------

int cmd_proptest(const std::string& suite, std::size_t count, const Settings& s,
                 std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  bool all_passed = true;
  json reports = json::array();
  if (s.fmt() == Format::kCsv) out << "suite,cases,failures,skipped,passed\n";
  for (const std::string& name : names) {
    const SuiteReport r = run_suite(name, s.seed, count);
    all_passed = all_passed && r.passed();
    if (s.fmt() == Format::kJson) {
      reports.push_back(json::parse(suite_to_json(r)));
    } else if (s.fmt() == Format::kCsv) {
      out << r.name << "," << r.cases << "," << r.failures << "," << r.skipped
          << "," << (r.passed() ? "true" : "false") << "\n";
    } else {
      out << r.name << ": " << r.cases << " cases, " << r.failures
          << " failures, " << r.skipped << " skipped: "
          << (r.passed() ? "PASS" : "FAIL") << "\n";
      for (const std::string& d : r.diagnostics) out << "  " << d << "\n";
    }
  }
  if (s.fmt() == Format::kJson) {
    out << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  }
  return all_passed ? kOk : kVerificationFailed;
}

// ---- cloud / prokhorov ----------------------------------------------------

int cmd_cloud(const std::string& file, const std::string& radius_text,
              std::size_t samples, const std::string& kappa_text,
              const Settings& s, std::ostream& out) {
  const FiniteMMSpace space = parse_space(read_input(file));
  const Rational radius = flag_rational(radius_text, "--radius");
  if (samples == 0) throw DomainError("--count must be at least 1");
  const MeasureCloud cloud = measurement_cloud(space, radius, samples, s.seed);
  if (s.fmt() == Format::kCsv) unsupported_csv("cloud");
  if (s.fmt() == Format::kJson) {
    out << cloud_to_json(cloud);
    return kOk;
  }
  out << "members: " << cloud.members.size() << " (from " << samples
      << " sampled maps into [-" << to_string(radius) << ", "
      << to_string(radius) << "])\n";
  if (!kappa_text.empty()) {
    const Rational kappa = flag_rational(kappa_text, "--kappa");
    out << "sup pd(member; 1 - kappa) = "
        << exact_and_decimal(cloud_pd_supremum(cloud, 1 - kappa)) << "\n";
  }
  return kOk;
}

int cmd_prokhorov(const std::string& first, const std::string& second,
                  const std::string& mode_text, bool clouds, const Settings& s,
                  std::ostream& out) {
  const ProkhorovMode mode =
      mode_text == "symmetric" ? ProkhorovMode::kSymmetric : ProkhorovMode::kOneSided;
  Rational d;
  if (clouds) {
    d = hausdorff_prokhorov(parse_cloud(read_input(first)),
                            parse_cloud(read_input(second)), mode);
  } else {
    const DiscreteMeasure mu = parse_measure(read_input(first));
    const DiscreteMeasure nu = parse_measure(read_input(second));
    d = mode == ProkhorovMode::kSymmetric ? prokhorov_symmetric(mu, nu)
                                          : prokhorov_onesided(mu, nu);
  }
  if (s.fmt() == Format::kCsv) unsupported_csv("prokhorov");
  if (s.fmt() == Format::kJson) {
    json doc = {{"schema", kReportSchema},
                {"kind", clouds ? "hausdorff_prokhorov" : "prokhorov"},
                {"mode", mode_text},
                {"value", to_string(d)},
                {"decimal", to_decimal(d)}};
    out << doc.dump(2) << "\n";
  } else {
    out << (clouds ? "d_H = " : "d_P = ") << exact_and_decimal(d) << "\n";
  }
  return kOk;
}

// ---- profile / example-space ----------------------------------------------

std::vector<Rational> parse_kappa_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(flag_rational(item, "--kappas"));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int cmd_profile(const std::string& file, const std::string& screen_text,
                const std::string& kappas_text, int grid, const Settings& s,
                std::ostream& out) {
  const FiniteMMSpace space = parse_space(read_input(file));
  const Screen screen = Screen::parse(screen_text);
  std::vector<Rational> kappas;
  if (!kappas_text.empty()) {
    kappas = parse_kappa_list(kappas_text);
  } else {
    if (grid < 2) throw DomainError("--grid must be at least 2");
    for (int k = 1; k < grid; ++k) kappas.push_back(ratio(k, grid));
  }
  const SemicontinuityProfile p =
      semicontinuity_profile(space, screen, kappas, s.od_options());
  switch (s.fmt()) {
    case Format::kJson:
      out << profile_to_json(p);
      break;
    case Format::kCsv:
      out << profile_to_csv(p);
      break;
    case Format::kText:
      out << "kappa  od\n";
      for (const ProfileRow& row : p.rows) {
        out << to_string(row.kappa) << "  " << row.od.to_string() << "\n";
      }
      out << "monotone nonincreasing: " << ok(p.monotone) << "\n";
      for (const JumpCheck& j : p.jumps) {
        out << "jump at kappa = " << to_string(j.kappa) << ": od = "
            << to_string(j.at) << ", right value " << to_string(j.right) << ": "
            << ok(j.right_continuous) << "\n";
      }
      out << (p.passed() ? "PASS" : "FAIL") << "\n";
      break;
  }
  return p.passed() ? kOk : kVerificationFailed;
}

int cmd_example_space(int n, const std::string& radius_text, std::ostream& out) {
  out << space_to_json(example_space(n, flag_rational(radius_text, "R")));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact partial and observable diameters of finite mm-spaces",
               "obsdiam"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", s.seed, "Seed for randomized commands")->capture_default_str();
  app.add_option("--tol", s.tol, "Certified interval width in approximate mode")
      ->capture_default_str();
  app.add_option("--cap-n", s.cap_n, "Point cap for the exact od solver")
      ->capture_default_str();
  app.add_flag("--approx", s.approx,
               "Bisection with certified intervals instead of exact Newton steps");

  std::string file, file2, alpha, kappa, radius = "1", screen = "fullline",
                                        output, step = "1/64", kappas, mode = "onesided",
                                        suite, r_pos, kappa_pos;
  int n = 2, n_max = 4, grid = 20;
  std::size_t count = 100, samples = 32, grid_cap = kDefaultGridCap;
  bool clouds = false;

  auto* pd = app.add_subcommand("pd", "Partial diameter of a measure file");
  pd->add_option("measure", file, "Measure JSON ('-' for stdin)")->required();
  pd->add_option("--alpha", alpha, "Mass level in [0, 1]")->required();

  auto* compress = app.add_subcommand(
      "compress", "Build the 1-Lipschitz clamp map and verify pd and range");
  compress->add_option("measure", file, "Measure JSON")->required();
  compress->add_option("--alpha", alpha, "Mass level in (0, 1)")->required();
  compress->add_option("--radius", radius, "Clamp radius R > 0")->capture_default_str();
  compress->add_option("--output", output, "Write the map JSON to this file");

  auto* od = app.add_subcommand("od", "Observable diameter of an mm-space file");
  od->add_option("space", file, "mm-space JSON")->required();
  od->add_option("--screen", screen, "fullline | interval:a:b")->capture_default_str();
  od->add_option("--kappa", kappa, "kappa in (0, 1)")->required();

  auto* grid_od = app.add_subcommand("grid-od", "Grid lower-bound oracle for od");
  grid_od->add_option("space", file, "mm-space JSON")->required();
  grid_od->add_option("--screen", screen, "interval:a:b")->required();
  grid_od->add_option("--kappa", kappa, "kappa in (0, 1)")->required();
  grid_od->add_option("--step", step, "Grid step")->capture_default_str();
  grid_od->add_option("--grid-cap", grid_cap, "Point cap")->capture_default_str();

  auto* counter = app.add_subcommand("counterexample",
                                     "Verify the X_N family values exactly");
  counter->add_option("N", n, "Family index N >= 2")->required();
  counter->add_option("R", r_pos, "Radius R > 0")->required();
  counter->add_option("kappa", kappa_pos, "kappa (default 1 - 3/(4N))");

  auto* sharp = app.add_subcommand("sharpness", "Sweep n = 2..n_max of the family");
  sharp->add_option("R", r_pos, "Radius R > 0")->required();
  sharp->add_option("n_max", n_max, "Largest n")->required();

  auto* prop = app.add_subcommand("proptest", "Run a randomized invariant suite");
  std::string suite_help = "Suite name or 'all':";
  for (const std::string& name : suite_names()) suite_help += " " + name;
  prop->add_option("suite", suite, suite_help)->required();
  prop->add_option("--count", count, "Random base instances")->capture_default_str();

  auto* cloud = app.add_subcommand("cloud", "Sampled measurement cloud of a space");
  cloud->add_option("space", file, "mm-space JSON")->required();
  cloud->add_option("--radius", radius, "Screen [-R, R]")->capture_default_str();
  cloud->add_option("--count", samples, "Sampled maps")->capture_default_str();
  cloud->add_option("--kappa", kappa, "Report sup pd(member; 1 - kappa)");

  auto* prok = app.add_subcommand("prokhorov", "Prokhorov distance of two measures");
  prok->add_option("first", file, "Measure (or cloud) JSON")->required();
  prok->add_option("second", file2, "Measure (or cloud) JSON")->required();
  prok->add_option("--mode", mode, "onesided | symmetric")
      ->check(CLI::IsMember({"onesided", "symmetric"}))
      ->capture_default_str();
  prok->add_flag("--clouds", clouds, "Inputs are clouds; report Hausdorff distance");

  auto* profile = app.add_subcommand("profile", "od as a function of kappa");
  profile->add_option("space", file, "mm-space JSON")->required();
  profile->add_option("--screen", screen, "fullline | interval:a:b")
      ->capture_default_str();
  profile->add_option("--kappas", kappas, "Comma-separated kappa list");
  profile->add_option("--grid", grid, "Use kappa = k/grid, 0 < k < grid")
      ->capture_default_str();

  auto* example = app.add_subcommand("example-space", "Write X_N as mm-space JSON");
  example->add_option("N", n, "N >= 2")->required();
  example->add_option("R", r_pos, "R > 0")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*pd) return cmd_pd(file, alpha, s, out);
    if (*compress) return cmd_compress(file, alpha, radius, output, s, out);
    if (*od) return cmd_od(file, screen, kappa, s, out, err);
    if (*grid_od) return cmd_grid_od(file, screen, kappa, step, grid_cap, s, out);
    if (*counter) return cmd_counterexample(n, r_pos, kappa_pos, s, out);
    if (*sharp) return cmd_sharpness(r_pos, n_max, s, out);
    if (*prop) return cmd_proptest(suite, count, s, out);
    if (*cloud) return cmd_cloud(file, radius, samples, kappa, s, out);
    if (*prok) return cmd_prokhorov(file, file2, mode, clouds, s, out);
    if (*profile) return cmd_profile(file, screen, kappas, grid, s, out);
    if (*example) return cmd_example_space(n, r_pos, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ContractError& e) {
    err << "error: precondition violated: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace obsdiam::cli
