// Copyright 2026 The eonsim Authors
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

#include "eonsim/report.h"

#include <charconv>
#include <ostream>

namespace eonsim {

std::string FormatNumber(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

void WriteTrialsHeader(std::ostream& out) {
  out << "series,load_erlangs,trial,seed,blocked,total,sbp,defragmented,"
         "mean_hops,mean_km\n";
}

void WriteTrialsRows(std::ostream& out, std::string_view series,
                     const LoadSweepResult& sweep) {
  for (const LoadPoint& point : sweep.points) {
    for (size_t i = 0; i < point.results.size(); ++i) {
      const TrialResult& r = point.results[i];
      out << series << ',' << FormatNumber(point.load_erlangs) << ',' << i
          << ',' << r.seed << ',' << r.blocked << ',' << r.total << ','
          << FormatNumber(r.sbp) << ',' << r.defragmented << ','
          << FormatNumber(r.mean_hops) << ',' << FormatNumber(r.mean_km)
          << '\n';
    }
  }
}

void WriteSummaryHeader(std::ostream& out) {
  out << "series,load_erlangs,trials,mean_sbp,std_sbp,blocked_total\n";
}

void WriteSummaryRows(std::ostream& out, std::string_view series,
                      const LoadSweepResult& sweep) {
  for (const LoadPoint& p : sweep.points) {
    out << series << ',' << FormatNumber(p.load_erlangs) << ',' << p.trials
        << ',' << FormatNumber(p.mean_sbp) << ',' << FormatNumber(p.std_sbp)
        << ',' << p.blocked_total << '\n';
  }
}

void WriteOutcomesHeader(std::ostream& out) {
  out << "series,load_erlangs,trial,request,outcome\n";
}

void WriteOutcomesRows(std::ostream& out, std::string_view series,
                       const LoadSweepResult& sweep) {
  for (const LoadPoint& point : sweep.points) {
    for (size_t i = 0; i < point.results.size(); ++i) {
      const auto& outcomes = point.results[i].outcomes;
      for (size_t j = 0; j < outcomes.size(); ++j) {
        out << series << ',' << FormatNumber(point.load_erlangs) << ',' << i
            << ',' << j << ',' << ToString(outcomes[j]) << '\n';
      }
    }
  }
}

void WriteWarmupRows(std::ostream& out, const WarmupSummary& summary) {
  for (long long point : summary.truncation_points) {
    out << FormatNumber(summary.load_erlangs) << ',' << point << '\n';
  }
}

}  // namespace eonsim
