// Copyright 2026 The srkbench Authors
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

// Exact nonnegative integers and the few rational helpers the bounds need.

#ifndef SRK_NAT_HPP_
#define SRK_NAT_HPP_

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "srk/gf.hpp"

namespace srk {

using Nat = boost::multiprecision::cpp_int;

inline Nat nat_pow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw Error("negative exponent");
  return boost::multiprecision::pow(Nat(base), static_cast<unsigned>(exp));
}

inline std::string to_string(const Nat& n) { return n.str(); }

inline Nat parse_nat(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error("not a nonnegative integer: '" + s + "'");
  return Nat(s);
}

// Quotient that must be exact; a remainder means the caller's closed form
// is wrong.
inline Nat exact_div(const Nat& a, const Nat& b) {
  if (b == 0) throw Error("division by zero");
  Nat quot, rem;
  boost::multiprecision::divide_qr(a, b, quot, rem);
  if (rem != 0) throw Error("inexact division " + a.str() + " / " + b.str());
  return quot;
}

inline Nat ceil_div(const Nat& a, const Nat& b) {
  if (b == 0) throw Error("division by zero");
  return (a + b - 1) / b;
}

// log2 for arbitrarily large values; -inf for zero.
inline double log2_nat(const Nat& n) {
  if (n <= 0) return -INFINITY;
  const unsigned msb = boost::multiprecision::msb(n);
  if (msb < 53) return std::log2(n.convert_to<double>());
  const unsigned shift = msb - 52;
  const Nat top = n >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

inline double log_nat(const Nat& n) { return log2_nat(n) * std::log(2.0); }

// Reduced fraction num/den with den > 0.
struct Rational {
  Nat num{0};
  Nat den{1};

  static Rational make(Nat num, Nat den) {
    if (den == 0) throw Error("zero denominator");
    const Nat g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return {std::move(num), std::move(den)};
  }
  Nat floor() const { return num / den; }
  Nat ceil() const { return ceil_div(num, den); }
  double to_double() const { return std::exp2(log2_nat(num) - log2_nat(den)); }
  std::string str() const { return den == 1 ? num.str() : num.str() + "/" + den.str(); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace srk

#endif  // SRK_NAT_HPP_
