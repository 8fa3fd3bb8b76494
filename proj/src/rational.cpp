// Copyright 2026 The infoex Authors
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

#include "infoex/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "infoex/errors.hpp"

namespace infoex {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Overflow("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(value);
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

// Normalizes a wide fraction and narrows it back to 64 bits.
void assign(Wide num, Wide den, std::int64_t& out_num, std::int64_t& out_den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  out_num = narrow(num);
  out_den = narrow(den);
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) { assign(num, den, num_, den_); }

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(body, text));
  std::int64_t num = parse_int(trim(body.substr(0, slash)), text);
  std::string_view den_text = trim(body.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  std::int64_t den = parse_int(den_text, text);
  if (den == 0) throw InvalidArgument("rational with zero denominator '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<Wide>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  Wide num = static_cast<Wide>(num_) * rhs.den_ + static_cast<Wide>(rhs.num_) * den_;
  Wide den = static_cast<Wide>(den_) * rhs.den_;
  assign(num, den, num_, den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  Wide num = static_cast<Wide>(num_) * rhs.num_;
  Wide den = static_cast<Wide>(den_) * rhs.den_;
  assign(num, den, num_, den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw InvalidArgument("division by zero rational");
  Wide num = static_cast<Wide>(num_) * rhs.den_;
  Wide den = static_cast<Wide>(den_) * rhs.num_;
  assign(num, den, num_, den_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  Wide g = wide_gcd(a, b);
  Wide l = static_cast<Wide>(a) / g * b;
  return narrow(l < 0 ? -l : l);
}

}  // namespace infoex
