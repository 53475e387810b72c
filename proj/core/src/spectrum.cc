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

#include "eonsim/spectrum.h"

#include <algorithm>
#include <bit>
#include <cmath>

namespace eonsim {

namespace {

uint64_t RangeBits(int lo, int hi) {  // bits [lo, hi) of one word, hi <= 64
  uint64_t upper = hi == 64 ? ~uint64_t{0} : (uint64_t{1} << hi) - 1;
  uint64_t lower = (uint64_t{1} << lo) - 1;
  return upper & ~lower;
}

void CheckRange(int slots, SlotBlock block) {
  if (block.size < 1 || block.start < 0 || block.end() > slots) {
    throw SpectrumError("slot block [" + std::to_string(block.start) + ", " +
                        std::to_string(block.end()) + ") out of range");
  }
}

}  // namespace

SlotMask::SlotMask(int size, bool free)
    : size_(size), words_((size + 63) / 64, 0) {
  if (size < 0) throw std::invalid_argument("negative mask size");
  if (free && size > 0) SetFree(0, size);
}

SlotMask SlotMask::FromFree(const std::vector<bool>& free) {
  SlotMask mask(static_cast<int>(free.size()), false);
  for (int i = 0; i < mask.size_; ++i) {
    if (free[i]) mask.SetFree(i, 1);
  }
  return mask;
}

SlotMask SlotMask::FromOccupancy(const std::vector<bool>& occupied) {
  std::vector<bool> free(occupied.size());
  for (size_t i = 0; i < occupied.size(); ++i) free[i] = !occupied[i];
  return FromFree(free);
}

SlotMask SlotMask::FromOccupancyString(const std::string& occupancy) {
  std::vector<bool> occupied;
  for (char c : occupancy) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("occupancy string must be 0/1");
    }
    occupied.push_back(c == '1');
  }
  return FromOccupancy(occupied);
}

int SlotMask::CountFree() const {
  int total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool SlotMask::AllFree(int start, int count) const {
  return NextOccupied(start) >= start + count;
}

bool SlotMask::NoneFree(int start, int count) const {
  return NextFree(start) >= start + count;
}

void SlotMask::SetFree(int start, int count) {
  for (int pos = start, end = start + count; pos < end;) {
    int word = pos >> 6;
    int hi = std::min(end - (word << 6), 64);
    words_[word] |= RangeBits(pos & 63, hi);
    pos = (word + 1) << 6;
  }
}

void SlotMask::SetOccupied(int start, int count) {
  for (int pos = start, end = start + count; pos < end;) {
    int word = pos >> 6;
    int hi = std::min(end - (word << 6), 64);
    words_[word] &= ~RangeBits(pos & 63, hi);
    pos = (word + 1) << 6;
  }
}

int SlotMask::NextFree(int from) const {
  if (from >= size_) return size_;
  int word = from >> 6;
  uint64_t bits = words_[word] & ~((uint64_t{1} << (from & 63)) - 1);
  for (;;) {
    if (bits != 0) {
      return std::min(size_, (word << 6) + std::countr_zero(bits));
    }
    if (++word >= static_cast<int>(words_.size())) return size_;
    bits = words_[word];
  }
}

int SlotMask::NextOccupied(int from) const {
  if (from >= size_) return size_;
  int word = from >> 6;
  uint64_t bits = ~words_[word] & ~((uint64_t{1} << (from & 63)) - 1);
  for (;;) {
    if (bits != 0) {
      return std::min(size_, (word << 6) + std::countr_zero(bits));
    }
    if (++word >= static_cast<int>(words_.size())) return size_;
    bits = ~words_[word];
  }
}

SlotMask& SlotMask::operator&=(const SlotMask& other) {
  if (other.size_ != size_) {
    throw std::invalid_argument("slot mask length mismatch");
  }
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<bool> SlotMask::ToFreeVector() const {
  std::vector<bool> out(size_);
  for (int i = 0; i < size_; ++i) out[i] = free(i);
  return out;
}

void SpectrumGrid::Allocate(SlotBlock block) {
  CheckRange(slots(), block);
  if (!free_.AllFree(block.start, block.size)) {
    throw SpectrumError("allocation overlaps occupied slots");
  }
  free_.SetOccupied(block.start, block.size);
}

void SpectrumGrid::Release(SlotBlock block) {
  CheckRange(slots(), block);
  if (!free_.NoneFree(block.start, block.size)) {
    throw SpectrumError("release of slots that are not occupied");
  }
  free_.SetFree(block.start, block.size);
}

NetworkState::NetworkState(const Topology& topology)
    : slots_(topology.slots_per_fiber()),
      grids_(topology.num_fibers(), SpectrumGrid(topology.slots_per_fiber())) {}

void NetworkState::Allocate(std::span<const FiberId> fibers, SlotBlock block) {
  for (FiberId f : fibers) {
    CheckRange(slots_, block);
    if (!grids_.at(f).free_mask().AllFree(block.start, block.size)) {
      throw SpectrumError("allocation overlaps occupied slots on fiber " +
                          std::to_string(f));
    }
  }
  for (FiberId f : fibers) grids_[f].Allocate(block);
  occupied_ += static_cast<long long>(fibers.size()) * block.size;
}

void NetworkState::Release(std::span<const FiberId> fibers, SlotBlock block) {
  for (FiberId f : fibers) {
    CheckRange(slots_, block);
    if (!grids_.at(f).free_mask().NoneFree(block.start, block.size)) {
      throw SpectrumError("release of unoccupied slots on fiber " +
                          std::to_string(f));
    }
  }
  for (FiberId f : fibers) grids_[f].Release(block);
  occupied_ -= static_cast<long long>(fibers.size()) * block.size;
}

SlotMask PathFreeMask(std::span<const SpectrumGrid* const> grids) {
  if (grids.empty()) throw std::invalid_argument("path has no links");
  SlotMask mask = grids.front()->free_mask();
  for (const SpectrumGrid* grid : grids.subspan(1)) {
    if (grid->slots() != mask.size()) {
      throw std::invalid_argument("grid length mismatch along path");
    }
    mask &= grid->free_mask();
  }
  return mask;
}

SlotMask PathFreeMask(const NetworkState& state,
                      std::span<const FiberId> fibers) {
  if (fibers.empty()) throw std::invalid_argument("path has no links");
  SlotMask mask = state.grid(fibers.front()).free_mask();
  for (FiberId f : fibers.subspan(1)) mask &= state.grid(f).free_mask();
  return mask;
}

std::optional<SlotBlock> FirstFit(const SlotMask& free, int size) {
  if (size < 1) throw std::invalid_argument("block size must be positive");
  int pos = free.NextFree(0);
  while (pos < free.size()) {
    int end = free.NextOccupied(pos);
    if (end - pos >= size) return SlotBlock{pos, size};
    pos = free.NextFree(end);
  }
  return std::nullopt;
}

std::optional<BestFitBlock> BestFit(const SlotMask& free, int size) {
  if (size < 1) throw std::invalid_argument("block size must be positive");
  std::optional<BestFitBlock> best;
  free.ForEachFreeRun([&](int start, int length) {
    if (length >= size && (!best || length < best->run_size)) {
      best = BestFitBlock{SlotBlock{start, size}, length};
    }
  });
  return best;
}

double FragmentationEntropy(const SlotMask& free) {
  const double total = free.size();
  double entropy = 0.0;
  free.ForEachFreeRun([&](int, int length) {
    double p = length / total;
    entropy -= p * std::log(p);
  });
  // A single full-width run gives -1*ln(1), which is exactly zero.
  return entropy == 0.0 ? 0.0 : entropy;
}

namespace {

template <typename GridAt>
double Congestion(size_t count, GridAt grid_at, CongestionMetric metric) {
  double result = 0.0;
  for (size_t i = 0; i < count; ++i) {
    const SpectrumGrid& grid = grid_at(i);
    double fraction =
        static_cast<double>(grid.occupied_count()) / grid.slots();
    if (metric == CongestionMetric::kMaxOccupiedFraction) {
      result = std::max(result, fraction);
    } else {
      result += fraction;
    }
  }
  return result;
}

}  // namespace

double PathCongestion(std::span<const SpectrumGrid* const> grids,
                      CongestionMetric metric) {
  if (grids.empty()) throw std::invalid_argument("path has no links");
  return Congestion(
      grids.size(), [&](size_t i) -> const SpectrumGrid& { return *grids[i]; },
      metric);
}

double PathCongestion(const NetworkState& state,
                      std::span<const FiberId> fibers,
                      CongestionMetric metric) {
  if (fibers.empty()) throw std::invalid_argument("path has no links");
  return Congestion(
      fibers.size(),
      [&](size_t i) -> const SpectrumGrid& { return state.grid(fibers[i]); },
      metric);
}

}  // namespace eonsim
