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

#ifndef DATADIFF_RENDER_HPP
#define DATADIFF_RENDER_HPP

#include <stdexcept>
#include <string>

#include "datadiff/operation.hpp"

namespace datadiff {

// Integer rationals render bare; non-integers as "(p/q)".
std::string render_rat_sql(const Rat& r);
std::string render_condition(const Condition& cond);
std::string render_modifier(const Modifier& mod);
std::string render_operation(const Operation& op, const std::string& relation_name);

// One statement per line, LF line endings, newline-terminated. The output is
// re-parsable by parse_script bit-exactly.
std::string render_sql(const Diff& diff, const std::string& relation_name);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
};

// Parses a script in the rendering grammar above (the only grammar accepted).
// Lines starting with "--" are comments. Throws ParseError.
Diff parse_script(const std::string& text);

}  // namespace datadiff

#endif  // DATADIFF_RENDER_HPP
