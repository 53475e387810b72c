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

#include "eonsim/heuristics.h"

#include <cmath>
#include <tuple>

namespace eonsim {

namespace {

// Scores closer than this are ties and fall through to candidate rank.
constexpr double kScoreTolerance = 1e-12;

std::optional<Allocation> FirstByRank(std::span<const CandidatePath> candidates,
                                      const ServiceRequest& request,
                                      const NetworkState& state,
                                      const DemandModel& model, bool best_fit) {
  for (int rank = 0; rank < static_cast<int>(candidates.size()); ++rank) {
    auto eval = EvaluateCandidate(candidates[rank], request, state, model,
                                  best_fit ? kScoreBestFit : kScoreFirstFit);
    if (best_fit && eval.best_fit) return Allocation{rank, eval.best_fit->block};
    if (!best_fit && eval.first_fit) return Allocation{rank, *eval.first_fit};
  }
  return std::nullopt;
}

// Candidate minimizing `score(eval)`; earlier rank wins within tolerance.
template <typename Score>
std::optional<Allocation> MinScoreFirstFit(
    std::span<const CandidatePath> candidates, const ServiceRequest& request,
    const NetworkState& state, const DemandModel& model, unsigned flags,
    CongestionMetric metric, Score score) {
  std::optional<Allocation> best;
  double best_score = 0.0;
  for (int rank = 0; rank < static_cast<int>(candidates.size()); ++rank) {
    auto eval = EvaluateCandidate(candidates[rank], request, state, model,
                                  flags | kScoreFirstFit, metric);
    if (!eval.first_fit) continue;
    double s = score(eval);
    if (!best || s < best_score - kScoreTolerance) {
      best = Allocation{rank, *eval.first_fit};
      best_score = s;
    }
  }
  return best;
}

}  // namespace

std::string_view ToString(HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::kKspFf: return "ksp-ff";
    case HeuristicKind::kFfKsp: return "ff-ksp";
    case HeuristicKind::kKspBf: return "ksp-bf";
    case HeuristicKind::kBfKsp: return "bf-ksp";
    case HeuristicKind::kKmeFf: return "kme-ff";
    case HeuristicKind::kKcaFf: return "kca-ff";
  }
  return "unknown";
}

std::optional<HeuristicKind> ParseHeuristic(std::string_view name) {
  for (HeuristicKind kind : kAllHeuristics) {
    if (ToString(kind) == name) return kind;
  }
  return std::nullopt;
}

std::optional<Allocation> Decide(HeuristicKind kind,
                                 const ServiceRequest& request,
                                 std::span<const CandidatePath> candidates,
                                 const NetworkState& state,
                                 const DemandModel& model,
                                 const HeuristicOptions& options) {
  switch (kind) {
    case HeuristicKind::kKspFf:
      return FirstByRank(candidates, request, state, model, false);
    case HeuristicKind::kKspBf:
      return FirstByRank(candidates, request, state, model, true);

    case HeuristicKind::kFfKsp: {
      std::optional<Allocation> best;
      for (int rank = 0; rank < static_cast<int>(candidates.size()); ++rank) {
        auto eval = EvaluateCandidate(candidates[rank], request, state, model,
                                      kScoreFirstFit);
        if (eval.first_fit &&
            (!best || eval.first_fit->start < best->block.start)) {
          best = Allocation{rank, *eval.first_fit};
          if (best->block.start == 0) break;  // cannot be beaten
        }
      }
      return best;
    }

    case HeuristicKind::kBfKsp: {
      std::optional<Allocation> best;
      std::tuple<int, int> best_key;
      for (int rank = 0; rank < static_cast<int>(candidates.size()); ++rank) {
        auto eval = EvaluateCandidate(candidates[rank], request, state, model,
                                      kScoreBestFit);
        if (!eval.best_fit) continue;
        std::tuple<int, int> key{eval.best_fit->run_size,
                                 eval.best_fit->block.start};
        if (!best || key < best_key) {
          best = Allocation{rank, eval.best_fit->block};
          best_key = key;
        }
      }
      return best;
    }

    case HeuristicKind::kKmeFf:
      return MinScoreFirstFit(
          candidates, request, state, model, kScoreEntropy, options.congestion,
          [](const CandidateEvaluation& e) { return e.entropy_after_first_fit; });

    case HeuristicKind::kKcaFf:
      return MinScoreFirstFit(
          candidates, request, state, model, kScoreCongestion,
          options.congestion,
          [](const CandidateEvaluation& e) { return e.congestion; });
  }
  return std::nullopt;
}

}  // namespace eonsim
