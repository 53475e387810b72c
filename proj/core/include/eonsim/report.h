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

// Tidy CSV output for sweeps: one row per trial or per load point.

#ifndef EONSIM_REPORT_H_
#define EONSIM_REPORT_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "eonsim/bounds.h"
#include "eonsim/simulator.h"

namespace eonsim {

// Shortest round-trip decimal form; identical runs give identical text.
std::string FormatNumber(double value);

// series,load_erlangs,trial,seed,blocked,total,sbp,defragmented,mean_hops,
// mean_km
void WriteTrialsHeader(std::ostream& out);
void WriteTrialsRows(std::ostream& out, std::string_view series,
                     const LoadSweepResult& sweep);

// series,load_erlangs,trials,mean_sbp,std_sbp,blocked_total
void WriteSummaryHeader(std::ostream& out);
void WriteSummaryRows(std::ostream& out, std::string_view series,
                      const LoadSweepResult& sweep);

// series,load_erlangs,trial,request,outcome (measured requests only)
void WriteOutcomesHeader(std::ostream& out);
void WriteOutcomesRows(std::ostream& out, std::string_view series,
                       const LoadSweepResult& sweep);

// load_erlangs,truncation_point (one row per trial)
void WriteWarmupRows(std::ostream& out, const WarmupSummary& summary);

}  // namespace eonsim

#endif  // EONSIM_REPORT_H_
