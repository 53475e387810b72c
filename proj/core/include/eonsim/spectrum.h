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

// Per-fiber frequency slot occupancy and the block-search primitives used by
// the allocation heuristics.

#ifndef EONSIM_SPECTRUM_H_
#define EONSIM_SPECTRUM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eonsim/topology.h"

namespace eonsim {

// Fixed-length bit vector where a set bit marks a free slot.
class SlotMask {
 public:
  SlotMask() = default;
  explicit SlotMask(int size, bool free = true);
  static SlotMask FromFree(const std::vector<bool>& free);
  // `occupied[i]` true means slot i is in use.
  static SlotMask FromOccupancy(const std::vector<bool>& occupied);
  // '1' = occupied, '0' = free, e.g. "11001000".
  static SlotMask FromOccupancyString(const std::string& occupancy);

  int size() const { return size_; }
  bool free(int slot) const {
    return (words_[slot >> 6] >> (slot & 63)) & 1u;
  }
  int CountFree() const;
  bool AllFree(int start, int count) const;
  bool NoneFree(int start, int count) const;
  void SetFree(int start, int count);
  void SetOccupied(int start, int count);

  // Index of the first free (resp. occupied) slot at or after `from`, or
  // size() when there is none.
  int NextFree(int from) const;
  int NextOccupied(int from) const;

  SlotMask& operator&=(const SlotMask& other);
  bool operator==(const SlotMask& other) const = default;
  std::vector<bool> ToFreeVector() const;

  // Calls fn(start, length) for every maximal run of free slots, in order.
  template <typename Fn>
  void ForEachFreeRun(Fn&& fn) const {
    int pos = NextFree(0);
    while (pos < size_) {
      int end = NextOccupied(pos);
      fn(pos, end - pos);
      pos = NextFree(end);
    }
  }

 private:
  int size_ = 0;
  std::vector<uint64_t> words_;
};

struct SlotBlock {
  int start = 0;
  int size = 0;
  int end() const { return start + size; }
  bool operator==(const SlotBlock&) const = default;
};

struct BestFitBlock {
  SlotBlock block;
  int run_size = 0;  // size of the maximal free run holding the block
};

class SpectrumError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SpectrumGrid {
 public:
  SpectrumGrid() = default;
  explicit SpectrumGrid(int slots) : free_(slots, true) {}

  int slots() const { return free_.size(); }
  const SlotMask& free_mask() const { return free_; }
  bool occupied(int slot) const { return !free_.free(slot); }
  int occupied_count() const { return free_.size() - free_.CountFree(); }

  // Throw SpectrumError when any slot of the block is already occupied
  // (Allocate) or already free (Release), or the block is out of range.
  void Allocate(SlotBlock block);
  void Release(SlotBlock block);

 private:
  SlotMask free_;
};

// Spectrum state of every fiber in a topology.
class NetworkState {
 public:
  NetworkState() = default;
  explicit NetworkState(const Topology& topology);

  int num_fibers() const { return static_cast<int>(grids_.size()); }
  int slots_per_fiber() const { return slots_; }
  const SpectrumGrid& grid(FiberId fiber) const { return grids_[fiber]; }
  long long occupied_slots() const { return occupied_; }

  // All-or-nothing over the fibers of a path.
  void Allocate(std::span<const FiberId> fibers, SlotBlock block);
  void Release(std::span<const FiberId> fibers, SlotBlock block);

 private:
  int slots_ = 0;
  long long occupied_ = 0;
  std::vector<SpectrumGrid> grids_;
};

// Slot i is free iff it is free on every grid. Throws std::invalid_argument
// on an empty set or mismatched grid lengths.
SlotMask PathFreeMask(std::span<const SpectrumGrid* const> grids);
SlotMask PathFreeMask(const NetworkState& state,
                      std::span<const FiberId> fibers);

// Lowest-index block of `size` contiguous free slots.
std::optional<SlotBlock> FirstFit(const SlotMask& free, int size);

// Block at the start of the smallest maximal free run that can hold `size`
// slots; ties go to the lowest start index.
std::optional<BestFitBlock> BestFit(const SlotMask& free, int size);

// Shannon entropy (natural log) of the free-run size distribution,
// normalized by the total slot count: -sum (D_i/D) ln(D_i/D).
double FragmentationEntropy(const SlotMask& free);

enum class CongestionMetric {
  kMaxOccupiedFraction,  // default
  kSumOccupiedFraction,
};

double PathCongestion(std::span<const SpectrumGrid* const> grids,
                      CongestionMetric metric =
                          CongestionMetric::kMaxOccupiedFraction);
double PathCongestion(const NetworkState& state,
                      std::span<const FiberId> fibers,
                      CongestionMetric metric =
                          CongestionMetric::kMaxOccupiedFraction);

}  // namespace eonsim

#endif  // EONSIM_SPECTRUM_H_
