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

#include "datadiff/rat.hpp"

#include <limits>
#include <tuple>
#include <numeric>
#include <stdexcept>

namespace datadiff {

namespace {

using Wide = __int128;

long long narrow(Wide v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<long long>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::pair<long long, long long> make_reduced(Wide n, Wide d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return {narrow(n), narrow(d)};
}

}  // namespace

Rat::Rat(long long n, long long d) {
  auto [rn, rd] = make_reduced(n, d);
  num_ = rn;
  den_ = rd;
}

long long Rat::as_integer() const {
  if (den_ != 1) throw std::logic_error("Rat::as_integer on non-integer " + to_string());
  return num_;
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = narrow(-static_cast<Wide>(num_));
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  std::tie(num_, den_) =
      make_reduced(static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_,
                   static_cast<Wide>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  std::tie(num_, den_) =
      make_reduced(static_cast<Wide>(num_) * o.den_ - static_cast<Wide>(o.num_) * den_,
                   static_cast<Wide>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  std::tie(num_, den_) =
      make_reduced(static_cast<Wide>(num_) * o.num_, static_cast<Wide>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  std::tie(num_, den_) =
      make_reduced(static_cast<Wide>(num_) * o.den_, static_cast<Wide>(den_) * o.num_);
  return *this;
}

bool Rat::operator<(const Rat& o) const {
  return static_cast<Wide>(num_) * o.den_ < static_cast<Wide>(o.num_) * den_;
}

std::string Rat::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat operator+(Rat a, const Rat& b) { return a += b; }
Rat operator-(Rat a, const Rat& b) { return a -= b; }
Rat operator*(Rat a, const Rat& b) { return a *= b; }
Rat operator/(Rat a, const Rat& b) { return a /= b; }

Rat abs(const Rat& a) { return a < Rat(0) ? -a : a; }

}  // namespace datadiff
