// Copyright 2026 The contract_forge Authors
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

#include "contract_forge/render.hpp"

#include <iterator>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace contract_forge {
namespace {

using ojson = nlohmann::ordered_json;

std::string_view payoff_label(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::kCompleteInfo:
      return "H_opt1";
    case RegimeTag::kAsymmetricNoIntermediary:
      return "H_opt2";
    case RegimeTag::kIntermediaryUnlimited:
      return "H_int";
    case RegimeTag::kIntermediaryLimitedEncouragement:
    case RegimeTag::kIntermediaryLimitedExclusion:
      return "H_lim";
  }
  return "H";
}

// Shortest representation that parses back to the same double.
std::string num(double x) { return fmt::format("{}", x); }

std::string fixed(double x) { return fmt::format("{:.4f}", x); }

std::string or_dash(const std::string& s) { return s.empty() ? "-" : s; }

void append_flag(std::string& out, bool set, std::string_view name) {
  if (!set) return;
  if (!out.empty()) out += ';';
  out += name;
}

void append_prefixed(std::string& out, const OutcomeFlags& flags,
                     std::string_view prefix) {
  append_flag(out, flags.shutdown, fmt::format("{}shutdown", prefix));
  append_flag(out, flags.s_bar1_clamped,
              fmt::format("{}s_bar1_clamped", prefix));
  append_flag(out, flags.s_bar2_clamped,
              fmt::format("{}s_bar2_clamped", prefix));
  append_flag(out, flags.participation_violated,
              fmt::format("{}participation_violated", prefix));
}

ojson flags_json(const OutcomeFlags& flags) {
  return {{"shutdown", flags.shutdown},
          {"s_bar1_clamped", flags.s_bar1_clamped},
          {"s_bar2_clamped", flags.s_bar2_clamped},
          {"participation_violated", flags.participation_violated}};
}

ojson line_json(const ContractLine& line) {
  return {{"report", to_string(line.report_case)},
          {"effort", line.effort},
          {"producer_payoff", line.producer_payoff},
          {"legal_transfer", line.legal_transfer}};
}

ojson row_json(const ComparisonRow& row) {
  ojson out;
  out["producer"] = row.producer;
  out["status"] = row.failed ? "failed" : "ok";
  if (row.failed) {
    out["error"] = row.error;
    return out;
  }
  out["H_opt1"] = row.h_opt1;
  out["H_opt2"] = row.h_opt2;
  out["H_lim"] = row.h_lim;
  out["H_lim_encouragement"] = row.h_lim_encouragement;
  out["H_lim_exclusion"] = row.h_lim_exclusion;
  out["rent_delta"] = row.rent_delta;
  out["intermediary_delta"] = row.intermediary_delta;
  out["branch"] = to_string(row.branch);
  out["switch_rule"] = {{"branch", to_string(row.switch_rule.branch())},
                        {"lhs", row.switch_rule.lhs},
                        {"rhs", row.switch_rule.rhs}};
  out["branch_disagreement"] = row.branch_disagreement;
  out["recommendation"] = to_string(row.recommendation);
  out["best_contribution"] = row.best_contribution();
  out["asym_flags"] = flags_json(row.asym_flags);
  out["limited_flags"] = flags_json(row.limited_flags);
  const CorruptionDiagnostics& c = row.corruption;
  out["corruption"] = {{"bribe_incentive", c.bribe_incentive},
                       {"blackmail_exposure", c.blackmail_exposure},
                       {"max_rational_bribe", c.max_rational_bribe},
                       {"intermediary_bribe_value", c.intermediary_bribe_value},
                       {"intermediary_blackmail_value",
                        c.intermediary_blackmail_value},
                       {"corruption_free", c.corruption_free()}};
  return out;
}

constexpr std::string_view kCompareCsvHeader =
    "producer,status,error,H_opt1,H_opt2,H_lim,H_lim_encouragement,"
    "H_lim_exclusion,rent_delta,intermediary_delta,branch,switch_branch,"
    "switch_lhs,switch_rhs,recommendation,flags";

std::string compare_csv_fields(const ComparisonRow& row) {
  if (row.failed) {
    return fmt::format("{},failed,{}{}", csv_field(row.producer),
                       csv_field(row.error), std::string(13, ','));
  }
  return fmt::format(
      "{},ok,,{},{},{},{},{},{},{},{},{},{},{},{},{}", csv_field(row.producer),
      num(row.h_opt1), num(row.h_opt2), num(row.h_lim),
      num(row.h_lim_encouragement), num(row.h_lim_exclusion),
      num(row.rent_delta), num(row.intermediary_delta), to_string(row.branch),
      to_string(row.switch_rule.branch()), num(row.switch_rule.lhs),
      num(row.switch_rule.rhs), to_string(row.recommendation),
      csv_field(flags_string(row)));
}

void compare_table_rows(std::string& out, const ComparisonReport& report,
                        std::string_view indent) {
  fmt::format_to(std::back_inserter(out),
                 "{}{:<12} {:>12} {:>12} {:>12} {:>10} {:>10} {:<13} {:>8} "
                 "{:>8} {:<16} {}\n",
                 indent, "producer", "H_opt1", "H_opt2", "H_lim", "rent",
                 "int_gain", "branch", "sw_lhs", "sw_rhs", "recommendation",
                 "flags");
  for (const ComparisonRow& row : report.rows) {
    if (row.failed) {
      fmt::format_to(std::back_inserter(out), "{}{:<12} FAILED: {}\n", indent,
                     row.producer, row.error);
      continue;
    }
    fmt::format_to(std::back_inserter(out),
                   "{}{:<12} {:>12} {:>12} {:>12} {:>10} {:>10} {:<13} {:>8} "
                   "{:>8} {:<16} {}\n",
                   indent, row.producer, fixed(row.h_opt1), fixed(row.h_opt2),
                   fixed(row.h_lim), fixed(row.rent_delta),
                   fixed(row.intermediary_delta), to_string(row.branch),
                   fixed(row.switch_rule.lhs), fixed(row.switch_rule.rhs),
                   to_string(row.recommendation), or_dash(flags_string(row)));
  }
}

}  // namespace

std::optional<Format> format_from_string(std::string_view name) {
  if (name == "table") return Format::kTable;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

std::string flags_string(const OutcomeFlags& flags) {
  std::string out;
  append_prefixed(out, flags, "");
  return out;
}

std::string flags_string(const ComparisonRow& row) {
  std::string out;
  append_prefixed(out, row.asym_flags, "asym:");
  append_prefixed(out, row.limited_flags, "lim:");
  append_flag(out, row.branch_disagreement, "branch_disagreement");
  return out;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

ojson to_json(const RegimeResult& result) {
  const std::string_view label = payoff_label(result.tag);
  ojson producers = ojson::array();
  for (const ProducerOutcome& o : result.producers) {
    ojson p;
    p["name"] = o.name;
    p["e_f"] = o.e_f;
    p["e_d"] = o.e_d;
    p["e4"] = o.e4;
    p["H1"] = o.payoff[0];
    p["H2"] = o.payoff[1];
    p["H3"] = o.payoff[2];
    p["H4"] = o.payoff[3];
    p["s_f"] = o.s_f;
    p["s_d"] = o.s_d;
    p["s_bar1"] = o.s_bar1;
    p["s_bar2"] = o.s_bar2;
    p["s_bar1_raw"] = o.s_bar1_raw;
    p["s_bar2_raw"] = o.s_bar2_raw;
    p["expected_producer_payoff"] = o.expected_producer_payoff;
    p[std::string(label)] = o.principal_payoff;
    p["flags"] = flags_json(o.flags);
    if (o.menu) {
      p["menu"] = ojson::array({line_json(o.menu->favourable),
                                line_json(o.menu->unfavourable),
                                line_json(o.menu->unknown[0]),
                                line_json(o.menu->unknown[1])});
    }
    producers.push_back(std::move(p));
  }
  return {{"regime", to_string(result.tag)},
          {"producers", std::move(producers)},
          {"total_" + std::string(label), result.total_principal_payoff}};
}

ojson to_json(const ComparisonReport& report) {
  ojson rows = ojson::array();
  for (const ComparisonRow& row : report.rows) rows.push_back(row_json(row));
  return {{"mu", report.mu},
          {"alpha", report.alpha},
          {"rows", std::move(rows)},
          {"totals",
           {{"H_opt1", report.total_h_opt1},
            {"H_opt2", report.total_h_opt2},
            {"H_lim", report.total_h_lim},
            {"best", report.total_best}}},
          {"ranking", report.ranking}};
}

ojson to_json(const SweepResult& sweep) {
  ojson points = ojson::array();
  for (const SweepPoint& point : sweep.points) {
    ojson p = {{"index", point.index},
               {"value", point.value},
               {"status", point.valid ? "ok" : "invalid"}};
    if (point.valid) {
      p["report"] = to_json(point.report);
    } else {
      p["error"] = point.error;
    }
    points.push_back(std::move(p));
  }
  ojson switches = ojson::array();
  for (const SwitchPoint& s : sweep.switch_points) {
    switches.push_back({{"producer", s.producer},
                        {"index", s.index},
                        {"value", s.value},
                        {"from", to_string(s.from)},
                        {"to", to_string(s.to)}});
  }
  return {{"param", sweep.spec.param},
          {"from", sweep.spec.from},
          {"to", sweep.spec.to},
          {"steps", sweep.spec.steps},
          {"points", std::move(points)},
          {"switch_points", std::move(switches)}};
}

std::string render(std::span<const RegimeResult> results, Format format) {
  std::string out;
  auto it = std::back_inserter(out);
  switch (format) {
    case Format::kJson: {
      ojson doc = {{"results", ojson::array()}};
      for (const RegimeResult& r : results) doc["results"].push_back(to_json(r));
      return doc.dump(2) + "\n";
    }
    case Format::kCsv: {
      out += "regime,producer,e_f,e_d,e4,H1,H2,H3,H4,s_f,s_d,s_bar1,s_bar2,"
             "s_bar1_raw,s_bar2_raw,expected_producer_payoff,principal_payoff,"
             "flags\n";
      for (const RegimeResult& r : results) {
        for (const ProducerOutcome& o : r.producers) {
          fmt::format_to(
              it, "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
              to_string(r.tag), csv_field(o.name), num(o.e_f), num(o.e_d),
              num(o.e4), num(o.payoff[0]), num(o.payoff[1]), num(o.payoff[2]),
              num(o.payoff[3]), num(o.s_f), num(o.s_d), num(o.s_bar1),
              num(o.s_bar2), num(o.s_bar1_raw), num(o.s_bar2_raw),
              num(o.expected_producer_payoff), num(o.principal_payoff),
              csv_field(flags_string(o.flags)));
        }
      }
      return out;
    }
    case Format::kTable:
      break;
  }

  for (const RegimeResult& r : results) {
    const std::string_view label = payoff_label(r.tag);
    fmt::format_to(it, "regime: {}\n", to_string(r.tag));
    fmt::format_to(it,
                   "  {:<12} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} "
                   "{:>9} {:>9} {:>9} {:>12} {}\n",
                   "producer", "e_f", "e_d", "e4", "H1", "H2", "H3", "H4",
                   "s_f", "s_d", "s_bar1", "s_bar2", label, "flags");
    for (const ProducerOutcome& o : r.producers) {
      fmt::format_to(it,
                     "  {:<12} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} "
                     "{:>9} {:>9} {:>9} {:>12} {}\n",
                     o.name, fixed(o.e_f), fixed(o.e_d), fixed(o.e4),
                     fixed(o.payoff[0]), fixed(o.payoff[1]),
                     fixed(o.payoff[2]), fixed(o.payoff[3]), fixed(o.s_f),
                     fixed(o.s_d), fixed(o.s_bar1), fixed(o.s_bar2),
                     fixed(o.principal_payoff), or_dash(flags_string(o.flags)));
    }
    fmt::format_to(it, "  total {}: {}\n", label,
                   fixed(r.total_principal_payoff));
    bool header = false;
    for (const ProducerOutcome& o : r.producers) {
      if (!o.menu) continue;
      if (!header) {
        fmt::format_to(it, "  contract menu (report: effort, producer payoff, "
                           "legal transfer)\n");
        header = true;
      }
      fmt::format_to(it, "    {}\n", o.name);
      for (const ContractLine& line : o.menu->lines()) {
        fmt::format_to(it, "      {:<13} {:>9} {:>9} {:>9}\n",
                       to_string(line.report_case), fixed(line.effort),
                       fixed(line.producer_payoff), fixed(line.legal_transfer));
      }
    }
    out += '\n';
  }
  return out;
}

std::string render(const ComparisonReport& report, Format format) {
  switch (format) {
    case Format::kJson:
      return to_json(report).dump(2) + "\n";
    case Format::kCsv: {
      std::string out(kCompareCsvHeader);
      out += '\n';
      for (const ComparisonRow& row : report.rows) {
        out += compare_csv_fields(row);
        out += '\n';
      }
      return out;
    }
    case Format::kTable:
      break;
  }
  std::string out;
  auto it = std::back_inserter(out);
  fmt::format_to(it, "comparison (mu = {}, alpha = {})\n", num(report.mu),
                 num(report.alpha));
  compare_table_rows(out, report, "  ");
  fmt::format_to(it, "  totals: H_opt1 {}  H_opt2 {}  H_lim {}  best {}\n",
                 fixed(report.total_h_opt1), fixed(report.total_h_opt2),
                 fixed(report.total_h_lim), fixed(report.total_best));
  fmt::format_to(it, "  ranking: {}\n", fmt::join(report.ranking, " > "));
  return out;
}

std::string render(const SweepResult& sweep, Format format) {
  if (format == Format::kJson) return to_json(sweep).dump(2) + "\n";

  std::string out;
  auto it = std::back_inserter(out);
  if (format == Format::kCsv) {
    fmt::format_to(it, "index,param,value,point_status,point_error,{}\n",
                   kCompareCsvHeader);
    for (const SweepPoint& point : sweep.points) {
      const std::string prefix =
          fmt::format("{},{},{}", point.index, csv_field(sweep.spec.param),
                      num(point.value));
      if (!point.valid) {
        fmt::format_to(it, "{},invalid,{}{}\n", prefix,
                       csv_field(point.error), std::string(16, ','));
        continue;
      }
      for (const ComparisonRow& row : point.report.rows) {
        fmt::format_to(it, "{},ok,,{}\n", prefix, compare_csv_fields(row));
      }
    }
    return out;
  }

  fmt::format_to(it, "sweep {} from {} to {} ({} steps)\n", sweep.spec.param,
                 num(sweep.spec.from), num(sweep.spec.to), sweep.spec.steps);
  for (const SweepPoint& point : sweep.points) {
    fmt::format_to(it, "[{}] {} = {}\n", point.index, sweep.spec.param,
                   fixed(point.value));
    if (!point.valid) {
      fmt::format_to(it, "    INVALID: {}\n", point.error);
      continue;
    }
    compare_table_rows(out, point.report, "    ");
  }
  if (sweep.switch_points.empty()) {
    out += "branch switch points: none\n";
  } else {
    out += "branch switch points:\n";
    for (const SwitchPoint& s : sweep.switch_points) {
      fmt::format_to(it, "  {} at {} = {} ({} -> {})\n", s.producer,
                     sweep.spec.param, num(s.value), to_string(s.from),
                     to_string(s.to));
    }
  }
  return out;
}

}  // namespace contract_forge
