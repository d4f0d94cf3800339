// Copyright 2026 The Datadiff Authors. All rights reserved.
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

#ifndef DATADIFF_BOUNDARY_HPP
#define DATADIFF_BOUNDARY_HPP

#include <map>
#include <string>
#include <vector>

#include "datadiff/rat.hpp"

namespace datadiff {

// Sorted distinct values observed for one attribute across both snapshots,
// with sentinels one past either end.
struct AxisBoundary {
  std::vector<Rat> values;
  Rat vmin;  // min(values) - 1
  Rat vmax;  // max(values) + 1
};

struct Boundary {
  std::map<std::string, AxisBoundary> axes;
};

}  // namespace datadiff

#endif  // DATADIFF_BOUNDARY_HPP
