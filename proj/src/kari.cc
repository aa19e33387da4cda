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

#include "qca/kari.h"

#include <set>

namespace qca {

std::pair<int, int> kari_direction(int bit) {
    static const std::pair<int, int> dirs[8] = {
        {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}};
    return dirs[bit];
}

uint16_t KariGrid::at(int64_t x, int64_t y) const {
    auto it = cells.find({x, y});
    return it == cells.end() ? 0 : it->second;
}

void KariGrid::set(int64_t x, int64_t y, uint16_t value) {
    if (value) {
        cells[{x, y}] = value;
    } else {
        cells.erase({x, y});
    }
}

KariGrid KariGrid::translated(int64_t dx, int64_t dy) const {
    KariGrid out;
    for (const auto &[pos, v] : cells) {
        out.cells[{pos.first + dx, pos.second + dy}] = v;
    }
    return out;
}

KariGrid kari_step(const KariGrid &grid) {
    std::set<std::pair<int64_t, int64_t>> touched;
    for (const auto &[pos, v] : grid.cells) {
        touched.insert(pos);
        if (v >> kCenter & 1) {
            for (int b = 0; b < 8; b++) {
                auto [dx, dy] = kari_direction(b);
                touched.insert({pos.first - dx, pos.second - dy});
            }
        }
    }
    KariGrid out;
    for (const auto &[x, y] : touched) {
        uint16_t v = grid.at(x, y);
        for (int b = 0; b < 8; b++) {
            auto [dx, dy] = kari_direction(b);
            if (grid.at(x + dx, y + dy) >> kCenter & 1) {
                v ^= (uint16_t)(1u << b);
            }
        }
        out.set(x, y, v);
    }
    return out;
}

}  // namespace qca
