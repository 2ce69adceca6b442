// Copyright 2026 The coherentqec Authors
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

#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

// Published logical maps used as fixtures.

inline const std::vector<std::tuple<long long, uint32_t, uint32_t>> kSteaneX = {
    {42, 0, 4}, {-252, 1, 4}, {21, 2, 0}, {504, 2, 4}, {-98, 3, 0}, {-336, 3, 4}, {210, 4, 0}, {-252, 5, 0},
    {168, 6, 0}, {-48, 7, 0},
};

inline const std::vector<std::tuple<long long, uint32_t, uint32_t>> kSteaneY = {
    {14, 0, 3}, {48, 0, 7}, {-168, 1, 3}, {504, 2, 3}, {-672, 3, 3}, {336, 4, 3},
};

inline const std::vector<std::tuple<long long, uint32_t, uint32_t>> kSurface16X = {
    {12, 0, 4}, {-10, 0, 6}, {-48, 0, 8}, {-16, 0, 10}, {28, 1, 2}, {-96, 1, 4}, {-32, 1, 6}, {384, 1, 8},
    {64, 1, 10}, {32, 2, 0}, {-222, 2, 2}, {208, 2, 4}, {704, 2, 6}, {-1152, 2, 8}, {-64, 2, 10}, {-188, 3, 0},
    {756, 3, 2}, {416, 3, 4}, {-2880, 3, 6}, {1536, 3, 8}, {484, 4, 0}, {-1378, 4, 2}, {-3088, 4, 4}, {5280, 4, 6},
    {-768, 4, 8}, {-500, 5, 0}, {1104, 5, 2}, {7040, 5, 4}, {-4608, 5, 6}, {-612, 6, 0}, {752, 6, 2}, {-8320, 6, 4},
    {1536, 6, 6}, {3136, 7, 0}, {-2880, 7, 2}, {5120, 7, 4}, {-5680, 8, 0}, {3120, 8, 2}, {-1280, 8, 4},
    {6080, 9, 0}, {-1600, 9, 2}, {-4032, 10, 0}, {320, 10, 2}, {1536, 11, 0}, {-256, 12, 0},
};

