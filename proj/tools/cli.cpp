/*
   Copyright 2026 The cantor Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cantor/analysis.hpp"
#include "cantor/base_system.hpp"
#include "cantor/buck_density.hpp"
#include "cantor/dynamics.hpp"
#include "cantor/equidistribution.hpp"
#include "cantor/error.hpp"
#include "cantor/permutations.hpp"
#include "cantor/rational.hpp"
#include "cantor/text.hpp"

namespace cantor::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Table, Csv, Json };

struct GlobalOptions {
  std::string bases = "2,3,5";
  std::string perms = "shift";
  std::string alpha = "0";
  std::optional<std::size_t> depth;
  std::string format = "table";
  std::string out_file;
};

struct Session {
  BaseSequence base;
  PermutationVector pv;
  DigitExpansion alpha;
  Format format;

  std::size_t depth() const { return base.depth(); }
};

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return Format::Table;
}

// Parses the base and permutations, then truncates both to --depth.
Session make_session(const GlobalOptions& o) {
  const BaseSequence full = make_base(parse_u64_list(o.bases));
  const std::size_t depth = o.depth.value_or(full.depth());
  if (depth == 0) throw Error(Errc::OutOfRange, "depth must be at least 1");
  if (depth > full.depth()) {
    throw Error(Errc::DepthExceeded, "depth " + std::to_string(depth) + " over " +
                                         std::to_string(full.depth()) + " moduli");
  }
  const PermutationVector full_pv = resolve_permutations(o.perms, full);
  BaseSequence base = make_base({full.moduli().begin(), full.moduli().begin() + depth});
  PermutationVector pv(base, {full_pv.perms().begin(), full_pv.perms().begin() + depth});
  DigitExpansion alpha = encode(parse_rational(o.alpha), base, depth);
  return Session{base, std::move(pv), std::move(alpha), parse_format(o.format)};
}

Json rational_json(const Rational& q) { return to_string(q); }

Json digits_json(std::span<const Digit> digits) { return Json(std::vector<Digit>(digits.begin(), digits.end())); }

void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << "\n"; }

// ---- expand / decode / map ---------------------------------------------------

void cmd_expand(const Session& s, const std::string& value, std::ostream& os) {
  const Rational x = parse_rational(value);
  const DigitExpansion e = encode(x, s.base, s.depth());
  const Rational back = decode(e);
  switch (s.format) {
    case Format::Table:
      os << join(e.digits()) << "\n";
      break;
    case Format::Csv:
      os << "value_num,value_den,digits,decoded_num,decoded_den\n"
         << num(x) << "," << den(x) << "," << join(e.digits(), ';') << "," << num(back) << ","
         << den(back) << "\n";
      break;
    case Format::Json:
      write_json(os, Json{{"value", rational_json(x)},
                          {"depth", s.depth()},
                          {"digits", digits_json(e.digits())},
                          {"decoded", rational_json(back)}});
      break;
  }
}

void cmd_decode(const Session& s, const std::string& digits, std::ostream& os) {
  const DigitExpansion e(s.base, parse_u64_list(digits));
  const Rational v = decode(e);
  switch (s.format) {
    case Format::Table:
      os << to_string(v) << "\n";
      break;
    case Format::Csv:
      os << "digits,value_num,value_den\n" << join(e.digits(), ';') << "," << num(v) << "," << den(v) << "\n";
      break;
    case Format::Json:
      write_json(os, Json{{"digits", digits_json(e.digits())}, {"value", rational_json(v)}});
      break;
  }
}

void write_points(const Session& s, const std::vector<OrbitPoint>& points, std::ostream& os) {
  switch (s.format) {
    case Format::Table:
      for (const auto& p : points) {
        os << p.index << "\t" << to_string(p.value) << "\t" << join(p.digits.digits()) << "\n";
      }
      break;
    case Format::Csv:
      os << "n,value_num,value_den,digits\n";
      for (const auto& p : points) {
        os << p.index << "," << num(p.value) << "," << den(p.value) << ","
           << join(p.digits.digits(), ';') << "\n";
      }
      break;
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& p : points) {
        arr.push_back(Json{{"n", to_string(p.index)},
                           {"value", rational_json(p.value)},
                           {"digits", digits_json(p.digits.digits())}});
      }
      write_json(os, arr);
      break;
    }
  }
}

void cmd_map(const Session& s, const std::optional<std::string>& value, std::ostream& os) {
  const DigitExpansion x = value ? encode(parse_rational(*value), s.base, s.depth()) : s.alpha;
  const DigitExpansion y = apply_map(s.pv, x);
  write_points(s, {OrbitPoint{Integer(1), y, y.value()}}, os);
}

void cmd_orbit(const Session& s, std::uint64_t count, const std::optional<std::string>& at,
               std::ostream& os) {
  const OrbitSpec spec(s.alpha, s.pv);
  if (at) {
    const Integer n = parse_integer(*at);
    write_points(s, {orbit_point(spec, n)}, os);
  } else {
    write_points(s, orbit_prefix(spec, count), os);
  }
}

// ---- check ---------------------------------------------------------------------

struct CheckOutcome {
  bool passed = true;
  std::string reason;
};

void write_level_report(const Session& s, const LevelReport& report, const DiscrepancyResult& d,
                        const CheckOutcome& outcome, std::ostream& os) {
  switch (s.format) {
    case Format::Table:
      os << "level " << report.level << "  N " << report.sample << "  d* " << to_string(d.d_star) << "\n";
      os << "j\tresidue\tmodulus\tcount\texpected\n";
      for (const auto& r : report.intervals) {
        os << r.index << "\t" << r.residue.residue << "\t" << r.residue.modulus << "\t" << r.count
           << "\t" << to_string(r.expected) << "\n";
      }
      os << (outcome.passed ? "PASS" : "FAIL: " + outcome.reason) << "\n";
      break;
    case Format::Csv:
      os << "j,residue,modulus,count,expected_num,expected_den\n";
      for (const auto& r : report.intervals) {
        os << r.index << "," << r.residue.residue << "," << r.residue.modulus << "," << r.count << ","
           << num(r.expected) << "," << den(r.expected) << "\n";
      }
      break;
    case Format::Json: {
      Json intervals = Json::array();
      for (const auto& r : report.intervals) {
        intervals.push_back(Json{{"j", to_string(r.index)},
                                 {"residue", to_string(r.residue.residue)},
                                 {"modulus", to_string(r.residue.modulus)},
                                 {"count", r.count},
                                 {"expected_num", to_string(num(r.expected))},
                                 {"expected_den", to_string(den(r.expected))}});
      }
      write_json(os, Json{{"level", report.level},
                          {"N", report.sample},
                          {"intervals", intervals},
                          {"d_star_num", to_string(num(d.d_star))},
                          {"d_star_den", to_string(den(d.d_star))},
                          {"passed", outcome.passed}});
      break;
    }
  }
}

DiscrepancyResult orbit_discrepancy(const OrbitSpec& spec, std::uint64_t count) {
  std::vector<Rational> values;
  values.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) values.push_back(orbit_point(spec, n).value);
  return star_discrepancy(values);
}

int cmd_check_ud(const Session& s, std::size_t level, std::uint64_t count, std::ostream& os) {
  s.pv.require_full_cycles();
  const OrbitSpec spec(s.alpha, s.pv);
  const LevelReport report = membership_equivalence(spec, level, count);
  CheckOutcome outcome;
  const Integer cells = s.base.product(level);
  const Integer low = Integer(count) / cells;
  const Integer high = low + (Integer(count) % cells == 0 ? 0 : 1);
  std::uint64_t total = 0;
  for (const auto& r : report.intervals) {
    total += r.count;
    if (r.count < low || r.count > high) {
      outcome = {false, "cell " + to_string(r.index) + " has count " + std::to_string(r.count)};
      break;
    }
  }
  if (outcome.passed && total != count) outcome = {false, "counts do not sum to N"};
  if (outcome.passed) {
    std::vector<PeriodicSet> parts;
    for (const auto& r : report.intervals) parts.push_back(PeriodicSet::from(r.residue));
    krit1_check(parts);  // throws when the classes do not partition the naturals
  }
  write_level_report(s, report, orbit_discrepancy(spec, count), outcome, os);
  return outcome.passed ? kOk : kFalsified;
}

int cmd_check_equivalence(const Session& s, std::size_t level, std::uint64_t count, std::ostream& os) {
  s.pv.require_full_cycles();
  const OrbitSpec spec(s.alpha, s.pv);
  const LevelReport report = membership_equivalence(spec, level, count);  // throws when violated
  write_level_report(s, report, orbit_discrepancy(spec, count), CheckOutcome{}, os);
  return kOk;
}

int cmd_check_preserve(const Session& s, const std::string& source_name, std::size_t level,
                       std::uint64_t count, const std::optional<std::string>& max_dstar,
                       std::ostream& os) {
  const Source source = parse_source(source_name);
  const PreservationReport r = ud_preservation_probe(s.pv, source, count, level);
  CheckOutcome outcome;
  const bool grid_permuted = permutes_grid(s.pv, s.depth());
  if (!grid_permuted) outcome = {false, "T does not permute the grid"};
  if (outcome.passed && source == Source::Grid && count % static_cast<std::uint64_t>(s.base.product(s.depth())) == 0 &&
      r.image.d_star != r.input.d_star) {
    outcome = {false, "grid discrepancy changed"};
  }
  if (outcome.passed && max_dstar && r.image.d_star > parse_rational(*max_dstar)) {
    outcome = {false, "image discrepancy " + to_string(r.image.d_star) + " above " + *max_dstar};
  }
  switch (s.format) {
    case Format::Table:
      os << "source " << to_string(source) << "  level " << level << "  N " << count << "\n"
         << "input d*\t" << to_string(r.input.d_star) << "\n"
         << "image d*\t" << to_string(r.image.d_star) << "\n"
         << "grid permuted\t" << (grid_permuted ? "yes" : "no") << "\n"
         << "j\tinput\timage\n";
      for (std::size_t j = 0; j < r.input_counts.size(); ++j) {
        os << j << "\t" << r.input_counts[j] << "\t" << r.image_counts[j] << "\n";
      }
      os << (outcome.passed ? "PASS" : "FAIL: " + outcome.reason) << "\n";
      break;
    case Format::Csv:
      os << "j,input_count,image_count\n";
      for (std::size_t j = 0; j < r.input_counts.size(); ++j) {
        os << j << "," << r.input_counts[j] << "," << r.image_counts[j] << "\n";
      }
      break;
    case Format::Json:
      write_json(os, Json{{"source", to_string(source)},
                          {"level", level},
                          {"N", count},
                          {"input_d_star_num", to_string(num(r.input.d_star))},
                          {"input_d_star_den", to_string(den(r.input.d_star))},
                          {"image_d_star_num", to_string(num(r.image.d_star))},
                          {"image_d_star_den", to_string(den(r.image.d_star))},
                          {"grid_permuted", grid_permuted},
                          {"input_counts", r.input_counts},
                          {"image_counts", r.image_counts},
                          {"passed", outcome.passed}});
      break;
  }
  return outcome.passed ? kOk : kFalsified;
}

// ---- density -------------------------------------------------------------------

int cmd_density(Format format, const std::vector<std::string>& set_texts,
                const std::vector<std::string>& cover_texts, bool krit1, std::ostream& os) {
  std::vector<PeriodicSet> sets;
  for (const auto& t : set_texts) sets.push_back(parse_periodic_set(t));

  std::vector<std::pair<std::string, Rational>> rows;
  for (const auto& ps : sets) rows.emplace_back(to_string(ps), density(ps));
  if (sets.size() > 1) {
    PeriodicSet u = sets.front();
    PeriodicSet i = sets.front();
    for (std::size_t k = 1; k < sets.size(); ++k) {
      u = unite(u, sets[k]);
      i = intersect(i, sets[k]);
    }
    rows.emplace_back("union " + to_string(u), density(u));
    rows.emplace_back("intersection " + to_string(i), density(i));
  }
  if (!cover_texts.empty()) {
    std::vector<ResidueCondition> covering;
    for (const auto& t : cover_texts) {
      const PeriodicSet c = parse_periodic_set(t);
      for (auto r : c.residues()) covering.push_back({r, c.modulus()});
    }
    const CoveringBound cb = covering_bound(sets.front(), covering);
    rows.emplace_back("covering bound", cb.bound);
  }
  if (krit1) {
    const Krit1Verdict v = krit1_check(sets);
    rows.emplace_back("krit1 bound sum", v.bound_sum);
  }

  switch (format) {
    case Format::Table:
      for (const auto& [label, q] : rows) os << label << "\t" << to_string(q) << "\n";
      break;
    case Format::Csv:
      os << "set,density_num,density_den\n";
      for (const auto& [label, q] : rows) os << label << "," << num(q) << "," << den(q) << "\n";
      break;
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& [label, q] : rows) arr.push_back(Json{{"set", label}, {"density", rational_json(q)}});
      write_json(os, arr);
      break;
    }
  }
  return kOk;
}

// ---- probe ---------------------------------------------------------------------

void cmd_probe_monotone(const Session& s, std::size_t level, const std::string& interval,
                        std::size_t descent, std::ostream& os) {
  const MonotonicityWitness w =
      find_monotonicity_witness_descending(s.pv, level, parse_integer(interval), descent);
  switch (s.format) {
    case Format::Table:
      os << "cell level " << w.level << " index " << w.interval_index << " digit level "
         << w.digit_level << "\n";
      for (std::size_t i = 0; i < 4; ++i) {
        os << "k" << i + 1 << "=" << w.digits[i] << "\tx=" << to_string(w.points[i])
           << "\tT(x)=" << to_string(w.images[i]) << "\n";
      }
      break;
    case Format::Csv:
      os << "i,k,point_num,point_den,image_num,image_den\n";
      for (std::size_t i = 0; i < 4; ++i) {
        os << i + 1 << "," << w.digits[i] << "," << num(w.points[i]) << "," << den(w.points[i]) << ","
           << num(w.images[i]) << "," << den(w.images[i]) << "\n";
      }
      break;
    case Format::Json: {
      Json pts = Json::array();
      for (std::size_t i = 0; i < 4; ++i) {
        pts.push_back(Json{{"k", w.digits[i]},
                           {"point", rational_json(w.points[i])},
                           {"image", rational_json(w.images[i])}});
      }
      write_json(os, Json{{"level", w.level},
                          {"interval", to_string(w.interval_index)},
                          {"digit_level", w.digit_level},
                          {"points", pts}});
      break;
    }
  }
}

void write_quotient_rows(Format format, const std::vector<QuotientSample>& samples, std::ostream& os) {
  if (format == Format::Csv) {
    os << "s,a_s,ell,quot_num,quot_den\n";
    for (const auto& q : samples) {
      os << q.level << "," << q.a << "," << q.ell << "," << num(q.closed_form) << ","
         << den(q.closed_form) << "\n";
    }
  }
}

void cmd_probe_quotient(const Session& s, std::size_t digit, Digit ell, std::ostream& os) {
  const QuotientSample q = difference_quotient(s.pv, s.alpha, digit, ell);
  switch (s.format) {
    case Format::Table:
      os << to_string(q.closed_form) << "\n";
      break;
    case Format::Csv:
      write_quotient_rows(s.format, {q}, os);
      break;
    case Format::Json:
      write_json(os, Json{{"s", q.level},
                          {"a_s", q.a},
                          {"ell", q.ell},
                          {"closed_form", rational_json(q.closed_form)},
                          {"direct", rational_json(q.direct)}});
      break;
  }
}

void cmd_probe_derivative(const Session& s, std::size_t max_level, std::ostream& os) {
  const DerivativeProbe probe = derivative_probe(s.pv, s.alpha, max_level);
  switch (s.format) {
    case Format::Table:
      os << "s\ta_s\tcandidate\tslope1\tquotients\n";
      for (const auto& lp : probe.levels) {
        os << lp.level << "\t" << lp.a << "\t" << lp.candidate << "\t" << (lp.one_achievable ? "yes" : "no") << "\t";
        for (std::size_t i = 0; i < lp.quotients.size(); ++i) {
          os << (i ? " " : "") << to_string(lp.quotients[i].second);
        }
        os << "\n";
      }
      os << "slope 1 at every level: " << (probe.one_achievable_everywhere ? "yes" : "no") << "\n"
         << "candidates stable: " << (probe.candidates_stable ? "yes" : "no") << "\n";
      break;
    case Format::Csv: {
      std::vector<QuotientSample> rows;
      for (const auto& lp : probe.levels) {
        for (const auto& [ell, q] : lp.quotients) rows.push_back(QuotientSample{lp.level, lp.a, ell, q, q});
      }
      write_quotient_rows(s.format, rows, os);
      break;
    }
    case Format::Json: {
      Json levels = Json::array();
      for (const auto& lp : probe.levels) {
        Json qs = Json::array();
        for (const auto& [ell, q] : lp.quotients) qs.push_back(Json{{"ell", ell}, {"quotient", rational_json(q)}});
        levels.push_back(Json{{"s", lp.level},
                              {"a_s", lp.a},
                              {"candidate", to_string(lp.candidate)},
                              {"one_achievable", lp.one_achievable},
                              {"quotients", qs}});
      }
      write_json(os, Json{{"levels", levels},
                          {"one_achievable_everywhere", probe.one_achievable_everywhere},
                          {"candidates_stable", probe.candidates_stable}});
      break;
    }
  }
}

int exit_for(ErrorClass c) {
  switch (c) {
    case ErrorClass::Validation: return kValidation;
    case ErrorClass::Computation: return kComputation;
    case ErrorClass::Falsified: return kFalsified;
  }
  return kComputation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digit-permutation maps on Cantor series: orbits, densities and equidistribution checks",
               "cantor"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--bases", g.bases, "Pairwise coprime moduli, e.g. 2,3,5,7")->capture_default_str();
  app.add_option("--perms", g.perms, "shift | identity | permutation file | inline images '1,0;1,2,0'")
      ->capture_default_str();
  app.add_option("--alpha", g.alpha, "Seed point p/q in [0,1)")->capture_default_str();
  app.add_option("--depth", g.depth, "Working depth K (default: number of moduli)");
  app.add_option("--format", g.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out_file, "Write output to FILE instead of stdout");

  std::string value;
  auto* expand = app.add_subcommand("expand", "Cantor digits of a rational");
  expand->add_option("--value", value, "p/q in [0,1)")->required();

  std::string digits;
  auto* decode_cmd = app.add_subcommand("decode", "Value of a digit vector");
  decode_cmd->add_option("--digits", digits, "Comma-separated digits, most significant first")->required();

  std::optional<std::string> map_value;
  auto* map = app.add_subcommand("map", "Apply T once (to --value, or to --alpha)");
  map->add_option("--value", map_value, "p/q in [0,1)");

  std::uint64_t count = 1;
  std::optional<std::string> at;
  auto* orbit = app.add_subcommand("orbit", "Orbit points v(n) = T^n(alpha)");
  auto* count_opt = orbit->add_option("--count", count, "Print v(0..N-1)");
  orbit->add_option("--at", at, "Print the single point v(n); n may be arbitrarily large")
      ->excludes(count_opt);

  std::size_t level = 1;
  std::uint64_t check_count = 0;
  std::string source = "vdc";
  std::optional<std::string> max_dstar;
  auto* check = app.add_subcommand("check", "Exact equidistribution checks (exit 3 when falsified)");
  check->require_subcommand(1);
  auto* ud = check->add_subcommand("ud", "Every level-k cell receives floor or ceil of N/B_k points");
  auto* equivalence = check->add_subcommand("equivalence", "v(n) in cell j iff n = r_j (mod B_k)");
  auto* preserve = check->add_subcommand("preserve", "Discrepancy of a u.d. sequence and its image");
  for (auto* sub : {ud, equivalence, preserve}) {
    sub->add_option("--level", level, "Grid level k")->capture_default_str();
    sub->add_option("--count", check_count, "Sample size N")->required();
  }
  preserve->add_option("--source", source, "vdc | kronecker | grid")->capture_default_str();
  preserve->add_option("--max-dstar", max_dstar, "Fail when the image discrepancy exceeds p/q");

  std::vector<std::string> set_texts;
  std::vector<std::string> cover_texts;
  bool krit1 = false;
  auto* density_cmd = app.add_subcommand("density", "Buck density of periodic sets 'r1,r2(M)'");
  density_cmd->add_option("--set", set_texts, "Periodic set, repeatable")->required();
  density_cmd->add_option("--cover", cover_texts, "Covering classes for the first set, repeatable");
  density_cmd->add_flag("--krit1", krit1, "Check that the sets partition N with densities summing to 1");

  std::size_t probe_level = 0;
  std::string interval = "0";
  std::size_t descent = 4;
  std::size_t digit = 0;
  Digit ell = 0;
  std::size_t max_level = 1;
  auto* probe = app.add_subcommand("probe", "Monotonicity and difference-quotient probes");
  probe->require_subcommand(1);
  auto* monotone = probe->add_subcommand("monotone", "Witness that T is not monotone on a cell");
  monotone->add_option("--level", probe_level, "Cell level s")->capture_default_str();
  monotone->add_option("--interval", interval, "Cell index j")->capture_default_str();
  monotone->add_option("--descent", descent, "Levels to descend when a digit has no witness")
      ->capture_default_str();
  auto* quotient = probe->add_subcommand("quotient", "Slope of T when digit s of alpha becomes ell");
  quotient->add_option("--digit", digit, "Digit level s")->required();
  quotient->add_option("--ell", ell, "Replacement digit")->required();
  auto* derivative = probe->add_subcommand("derivative", "Achievable slopes at levels 0..S-1");
  derivative->add_option("--max-level", max_level, "Number of levels S")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  std::ostringstream buffer;
  int status = kOk;
  try {
    if (density_cmd->parsed()) {
      status = cmd_density(parse_format(g.format), set_texts, cover_texts, krit1, buffer);
    } else {
      const Session s = make_session(g);
      if (expand->parsed()) {
        cmd_expand(s, value, buffer);
      } else if (decode_cmd->parsed()) {
        cmd_decode(s, digits, buffer);
      } else if (map->parsed()) {
        cmd_map(s, map_value, buffer);
      } else if (orbit->parsed()) {
        cmd_orbit(s, count, at, buffer);
      } else if (ud->parsed()) {
        status = cmd_check_ud(s, level, check_count, buffer);
      } else if (equivalence->parsed()) {
        status = cmd_check_equivalence(s, level, check_count, buffer);
      } else if (preserve->parsed()) {
        status = cmd_check_preserve(s, source, level, check_count, max_dstar, buffer);
      } else if (monotone->parsed()) {
        cmd_probe_monotone(s, probe_level, interval, descent, buffer);
      } else if (quotient->parsed()) {
        cmd_probe_quotient(s, digit, ell, buffer);
      } else if (derivative->parsed()) {
        cmd_probe_derivative(s, max_level, buffer);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(classify(e.code()));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kComputation;
  }

  if (!g.out_file.empty()) {
    std::ofstream file(g.out_file, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << g.out_file << "\n";
      return kValidation;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return status;
}

}  // namespace cantor::cli
