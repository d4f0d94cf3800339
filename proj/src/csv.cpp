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

#include "datadiff/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace datadiff {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

long long parse_int(const std::string& s, int line_no) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": not an integer: '" + s +
                             "'");
  }
}

}  // namespace

Relation parse_relation_csv(const std::string& text, const std::string& key_attr) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty input (missing header)");

  Relation rel;
  rel.key_attr = key_attr;
  std::vector<std::string> header = split_line(line);
  int key_col = -1;
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == key_attr) {
      key_col = static_cast<int>(i);
    } else {
      rel.attrs.push_back(header[i]);
    }
  }
  if (key_col < 0) throw std::runtime_error("csv: key column '" + key_attr + "' not in header");

  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> fields = split_line(line);
    if (fields.size() != header.size()) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected " +
                               std::to_string(header.size()) + " fields, got " +
                               std::to_string(fields.size()));
    }
    long long key = parse_int(fields[key_col], line_no);
    std::vector<Rat> cells;
    cells.reserve(fields.size() - 1);
    for (size_t i = 0; i < fields.size(); ++i) {
      if (static_cast<int>(i) == key_col) continue;
      cells.emplace_back(parse_int(fields[i], line_no));
    }
    if (!rel.rows.emplace(key, std::move(cells)).second) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": duplicate key " +
                               std::to_string(key));
    }
  }
  return rel;
}

Relation load_relation_csv(const std::string& path, const std::string& key_attr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_relation_csv(buf.str(), key_attr);
}

std::string relation_to_csv(const Relation& rel) {
  std::string out = rel.key_attr;
  for (const auto& a : rel.attrs) out += "," + a;
  out += "\n";
  for (const auto& [key, cells] : rel.rows) {
    out += std::to_string(key);
    for (const auto& c : cells) out += "," + c.to_string();
    out += "\n";
  }
  return out;
}

void write_text_file(const std::string& text, const std::string& path) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << text;
    if (!out.good()) throw std::runtime_error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

void write_relation_csv(const Relation& rel, const std::string& path) {
  write_text_file(relation_to_csv(rel), path);
}

}  // namespace datadiff
