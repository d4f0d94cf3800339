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

#ifndef DATADIFF_CSV_HPP
#define DATADIFF_CSV_HPP

#include <string>

#include "datadiff/relation.hpp"

namespace datadiff {

// CSV format: first row is the header, comma delimiter, every cell a base-10
// integer, UTF-8, LF line endings. Throws std::runtime_error on malformed
// input (missing key column, duplicate keys, non-integer cells).
Relation load_relation_csv(const std::string& path, const std::string& key_attr);
Relation parse_relation_csv(const std::string& text, const std::string& key_attr);

std::string relation_to_csv(const Relation& rel);
// Writes via a temp file and rename so failures leave no partial output.
void write_relation_csv(const Relation& rel, const std::string& path);
void write_text_file(const std::string& text, const std::string& path);

}  // namespace datadiff

#endif  // DATADIFF_CSV_HPP
