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

// Finite fields GF(p^e) with precomputed arithmetic tables.
//
// Elements are dense indices in [0, q). The index of a polynomial
// c_0 + c_1 x + ... + c_{e-1} x^{e-1} is sum_i c_i p^i, so 0 and 1 are the
// additive and multiplicative identities and GF(p) embeds as [0, p).

#ifndef SRK_GF_HPP_
#define SRK_GF_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace srk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exhaustive routine would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

using Elem = std::uint16_t;

inline constexpr std::int64_t kMaxFieldSize = 1 << 16;

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Returns (p, e) with q = p^e, or nullopt if q is not a prime power.
inline std::optional<std::pair<int, int>> factor_prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), e);
}

namespace internal {

using Poly = std::vector<int>;  // coefficients, low degree first

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
inline Poly poly_mod(Poly a, const Poly& b, int p) {
  poly_trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    poly_trim(a);
  }
  return a;
}

inline Poly poly_from_index(std::int64_t idx, int p, int len) {
  Poly c(len);
  for (int i = 0; i < len; ++i) {
    c[i] = static_cast<int>(idx % p);
    idx /= p;
  }
  return c;
}

inline bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 1) return deg == 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Poly g = poly_from_index(idx, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace internal

// GF(p^e). Copies share the immutable arithmetic tables.
class Field {
 public:
  // Builds GF(p^e) using the lexicographically smallest monic irreducible
  // modulus of degree e, comparing coefficients from the constant term up.
  static Field make(int p, int e) {
    if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw Error("field exponent must be positive");
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) {
      q *= p;
      if (q > kMaxFieldSize) throw Error("field size exceeds 2^16");
    }
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->e = e;
    t->q = static_cast<int>(q);
    t->modulus = smallest_irreducible(p, e, q);
    t->build();
    return Field(std::move(t));
  }

  static Field make_q(std::int64_t q) {
    auto pe = factor_prime_power(q);
    if (!pe) throw Error("q = " + std::to_string(q) + " is not a prime power");
    return make(pe->first, pe->second);
  }

  int p() const { return t_->p; }
  int e() const { return t_->e; }
  int q() const { return t_->q; }
  const std::vector<int>& modulus() const { return t_->modulus; }

  Elem add(Elem a, Elem b) const {
    if (t_->small) return t_->add_tab[a * t_->q + b];
    return t_->digit_op(a, b, +1);
  }
  Elem sub(Elem a, Elem b) const {
    if (t_->small) return t_->sub_tab[a * t_->q + b];
    return t_->digit_op(a, b, -1);
  }
  Elem neg(Elem a) const { return t_->neg_tab[a]; }
  Elem mul(Elem a, Elem b) const {
    if (t_->small) return t_->mul_tab[a * t_->q + b];
    if (a == 0 || b == 0) return 0;
    return t_->exp_tab[(t_->log_tab[a] + t_->log_tab[b]) % (t_->q - 1)];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw Error("inverse of zero");
    return t_->inv_tab[a];
  }

  bool operator==(const Field& o) const { return p() == o.p() && e() == o.e(); }

 private:
  struct Tables {
    int p = 0, e = 0, q = 0;
    std::vector<int> modulus;
    bool small = false;
    std::vector<Elem> add_tab, sub_tab, mul_tab;
    std::vector<Elem> neg_tab, inv_tab, exp_tab;
    std::vector<int> log_tab;

    Elem digit_op(Elem a, Elem b, int sign) const {
      int out = 0, scale = 1;
      int x = a, y = b;
      for (int i = 0; i < e; ++i) {
        const int d = ((x % p + sign * (y % p)) % p + p) % p;
        out += d * scale;
        scale *= p;
        x /= p;
        y /= p;
      }
      return static_cast<Elem>(out);
    }

    Elem poly_mul(Elem a, Elem b) const {
      const internal::Poly pa = internal::poly_from_index(a, p, e);
      const internal::Poly pb = internal::poly_from_index(b, p, e);
      internal::Poly prod(2 * e, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      internal::Poly r = internal::poly_mod(prod, modulus, p);
      int out = 0, scale = 1;
      for (int c : r) {
        out += c * scale;
        scale *= p;
      }
      return static_cast<Elem>(out);
    }

    void build() {
      neg_tab.resize(q);
      for (int a = 0; a < q; ++a) neg_tab[a] = digit_op(0, static_cast<Elem>(a), -1);
      // Log/antilog tables from the first primitive element.
      exp_tab.assign(q, 0);
      log_tab.assign(q, -1);
      for (int g = (q == 2 ? 1 : 2); g < q; ++g) {
        std::vector<int> seen(q, -1);
        Elem x = 1;
        int order = 0;
        bool primitive = true;
        for (int k = 0; k < q - 1; ++k) {
          if (seen[x] >= 0) {
            primitive = false;
            break;
          }
          seen[x] = k;
          exp_tab[k] = x;
          x = poly_mul(x, static_cast<Elem>(g));
          ++order;
        }
        if (primitive && order == q - 1) {
          log_tab.assign(seen.begin(), seen.end());
          break;
        }
      }
      inv_tab.assign(q, 0);
      for (int a = 1; a < q; ++a) inv_tab[a] = exp_tab[(q - 1 - log_tab[a]) % (q - 1)];
      small = q <= 256;
      if (small) {
        add_tab.resize(q * q);
        sub_tab.resize(q * q);
        mul_tab.resize(q * q);
        for (int a = 0; a < q; ++a) {
          for (int b = 0; b < q; ++b) {
            const Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
            add_tab[a * q + b] = digit_op(ea, eb, +1);
            sub_tab[a * q + b] = digit_op(ea, eb, -1);
            mul_tab[a * q + b] =
                (a == 0 || b == 0) ? 0 : exp_tab[(log_tab[a] + log_tab[b]) % (q - 1)];
          }
        }
      }
    }
  };

  static std::vector<int> smallest_irreducible(int p, int e, std::int64_t q) {
    // Constant term is the most significant digit of the search order.
    for (std::int64_t idx = 0; idx < q; ++idx) {
      internal::Poly f(e + 1, 0);
      for (int j = 0; j < e; ++j) f[j] = static_cast<int>((idx / ipow(p, e - 1 - j)) % p);
      f[e] = 1;
      if (internal::is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found");
  }

  static std::int64_t ipow(std::int64_t b, int k) {
    std::int64_t r = 1;
    while (k-- > 0) r *= b;
    return r;
  }

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

}  // namespace srk

#endif  // SRK_GF_HPP_
