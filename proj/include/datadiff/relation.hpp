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

#ifndef DATADIFF_RELATION_HPP
#define DATADIFF_RELATION_HPP

#include <map>
#include <string>
#include <vector>

#include "datadiff/rat.hpp"

namespace datadiff {

// A keyed table. Keys are integers and unique; every row has one cell per
// entry of `attrs`. Cells are exact rationals; a freshly loaded relation has
// integer cells only (non-integers can appear transiently when hand-written
// scripts are applied in verify mode).
struct Relation {
  std::string key_attr;
  std::vector<std::string> attrs;  // non-key attributes, in column order
  std::map<long long, std::vector<Rat>> rows;

  // Index into `attrs`, or -1 when absent.
  int attr_index(const std::string& name) const;

  const Rat& cell(long long key, int attr_idx) const;
  void set_cell(long long key, int attr_idx, const Rat& v);

  bool integral() const;

  bool operator==(const Relation& o) const = default;
};

}  // namespace datadiff

#endif  // DATADIFF_RELATION_HPP
