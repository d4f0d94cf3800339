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

#ifndef DATADIFF_RAT_HPP
#define DATADIFF_RAT_HPP

#include <cstdint>
#include <string>

namespace datadiff {

// Exact rational number: reduced int64 numerator / positive int64 denominator.
// All arithmetic is exact; intermediate products run in 128-bit and overflow
// of the reduced result throws std::overflow_error.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  // Requires is_integer().
  long long as_integer() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  // "7", "-7" for integers, "p/q" otherwise.
  std::string to_string() const;

 private:
  long long num_;
  long long den_;
};

Rat operator+(Rat a, const Rat& b);
Rat operator-(Rat a, const Rat& b);
Rat operator*(Rat a, const Rat& b);
Rat operator/(Rat a, const Rat& b);

Rat abs(const Rat& a);

}  // namespace datadiff

#endif  // DATADIFF_RAT_HPP
