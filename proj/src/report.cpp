// Copyright 2026 the atmomin authors
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

// CSV and JSON emission.

#include <charconv>
#include <fstream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "atmomin/error.hpp"
#include "atmomin/sweep.hpp"

namespace atmomin {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = ATMOMIN_VERSION;

std::string cell(const Masked<double>& v) {
  return v.has_value() ? format_double(v.value()) : to_string(v.reason());
}

std::string cell(const Masked<long>& v) {
  return v.has_value() ? std::to_string(v.value()) : to_string(v.reason());
}

const char* eta_status(double eta) {
  return eta == 1.0 ? "validated" : "unvalidated-eta";
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw ContractViolation("unformattable number");
  return std::string(buf, end);
}

std::string format_csv(const SweepSpec& spec, std::span<const SweepRow> rows) {
  std::string out;
  out.reserve(rows.size() * 160 + 512);
  const auto meta = [&out](const std::string& key, const std::string& value) {
    out += "# " + key + "=" + value + "\n";
  };
  meta("tool", std::string("atmomin ") + kVersion);
  meta("mode", to_string(spec.mode));
  meta("convention", to_string(spec.convention));
  meta("omega", format_double(spec.omega));
  meta("eta", format_double(spec.eta));
  meta("eta_status", eta_status(spec.eta));
  meta("eps_tail", format_double(spec.epsilon_tail));
  meta("cutoff_cap", std::to_string(spec.cutoff_cap));
  if (spec.mode != SweepMode::Grid) meta("r_h", format_double(spec.r_h));
  if (spec.mode != SweepMode::Temperature) {
    std::string list;
    for (std::size_t i = 0; i < spec.d_hh_list.size(); ++i) {
      if (i) list += ';';
      list += format_double(spec.d_hh_list[i]);
    }
    meta("d_hh_list", list);
  }
  meta("verify_every", std::to_string(spec.verify_every));

  for (std::size_t i = 0; i < kSweepColumns.size(); ++i) {
    if (i) out += ',';
    out += kSweepColumns[i];
  }
  out += '\n';

  for (const SweepRow& row : rows) {
    out += cell(row.d_hh);
    out += ',' + cell(row.x);
    out += ',' + cell(row.r);
    out += ',' + format_double(row.r_h);
    out += ',' + cell(row.t_hh_over_th);
    out += ',' + cell(row.t_param);
    out += ',' + cell(row.min_closed);
    out += ',' + cell(row.min_paper_final);
    out += ',' + cell(row.min_numeric);
    out += ',' + cell(row.cutoff_used);
    out += '\n';
  }
  return out;
}

void write_output(const std::string& path, std::string_view content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  file.flush();
  if (!file) throw IoError("failed writing " + path);
}

std::string to_json(const AdjudicationReport& report, const CutoffPolicy& policy,
                    double eta) {
  Json j;
  j["tool"] = "atmomin";
  j["version"] = kVersion;
  j["report"] = "adjudicate";
  j["eta"] = eta;
  j["eta_status"] = eta_status(eta);
  j["eps_tail"] = policy.epsilon_tail;
  j["cutoff_cap"] = policy.n_max_cap;
  Json records = Json::array();
  for (const AdjudicationRecord& r : report.records) {
    Json rec;
    rec["t"] = r.t;
    rec["cutoff"] = r.cutoff;
    rec["min_numeric"] = r.min_numeric;
    rec["closed_x3_1"] = r.closed_x3_1;
    rec["paper_final"] = r.paper_final;
    if (r.ratio_numeric_over_paper) {
      rec["ratio_numeric_over_paper"] = *r.ratio_numeric_over_paper;
    } else {
      rec["ratio_numeric_over_paper"] = nullptr;
    }
    rec["argmax_x3"] = r.argmax_x3;
    rec["flat"] = r.flat;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  Json verdict;
  verdict["tolerance"] = report.tolerance;
  verdict["closed_x3_1_max_abs_dev"] = report.closed_x3_1_max_abs_dev;
  verdict["paper_final_max_abs_dev"] = report.paper_final_max_abs_dev;
  verdict["oracle_consistent_form"] = report.oracle_consistent_form;
  j["verdict"] = std::move(verdict);
  return j.dump(2) + "\n";
}

std::string to_json(const CriticalConstantResult& result) {
  Json j;
  j["tool"] = "atmomin";
  j["version"] = kVersion;
  j["report"] = "critical";
  j["criterion"] = "radicand-positivity";
  j["d_c"] = result.d_c;
  j["tangency_x"] = result.tangency_x;
  j["tangency_residual"] = result.tangency_residual;
  j["search_bounds"] = {result.lower, result.upper};
  j["reference_d_c"] = kReferenceCriticalConstant;
  j["deviation_from_reference"] = result.d_c - kReferenceCriticalConstant;
  return j.dump(2) + "\n";
}

}  // namespace atmomin
