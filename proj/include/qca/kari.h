// Copyright 2026 The qca Authors
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

#ifndef QCA_KARI_H
#define QCA_KARI_H

#include <cstdint>
#include <map>
#include <utility>

namespace qca {

/// Bits of a Kari cell: eight directional bits then the center bit.
enum KariBit : int { kNorth, kNorthEast, kEast, kSouthEast, kSouth, kSouthWest, kWest, kNorthWest, kCenter };

inline constexpr int kKariBits = 9;

/// (dx, dy) of each direction, y pointing north.
std::pair<int, int> kari_direction(int bit);

/// Finite configuration on Z^2; cells absent from the map are 0^9 (quiescent).
struct KariGrid {
    std::map<std::pair<int64_t, int64_t>, uint16_t> cells;

    uint16_t at(int64_t x, int64_t y) const;
    void set(int64_t x, int64_t y, uint16_t value);
    KariGrid translated(int64_t dx, int64_t dy) const;
    bool operator==(const KariGrid &) const = default;
};

/// Each directional bit of a cell is negated iff the neighbour in that
/// direction has center bit 1. Center bits never change.
KariGrid kari_step(const KariGrid &grid);

}  // namespace qca

#endif
