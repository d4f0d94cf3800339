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

#include "datadiff/relation.hpp"

#include <stdexcept>

namespace datadiff {

int Relation::attr_index(const std::string& name) const {
  for (size_t i = 0; i < attrs.size(); ++i) {
    if (attrs[i] == name) return static_cast<int>(i);
  }
  return -1;
}

const Rat& Relation::cell(long long key, int attr_idx) const {
  auto it = rows.find(key);
  if (it == rows.end()) throw std::out_of_range("no such key: " + std::to_string(key));
  return it->second.at(attr_idx);
}

void Relation::set_cell(long long key, int attr_idx, const Rat& v) {
  auto it = rows.find(key);
  if (it == rows.end()) throw std::out_of_range("no such key: " + std::to_string(key));
  it->second.at(attr_idx) = v;
}

bool Relation::integral() const {
  for (const auto& [key, cells] : rows) {
    for (const auto& c : cells) {
      if (!c.is_integer()) return false;
    }
  }
  return true;
}

}  // namespace datadiff
