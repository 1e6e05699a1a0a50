// SPDX-License-Identifier: Apache-2.0
//
// Sparse integer polynomials in up to 8 variables (the simple roots).
// Exponents are packed one byte per variable, variable 0 in the most
// significant byte, so key order is lexicographic order.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace jdt {

class Poly {
 public:
  using Key = std::uint64_t;
  static constexpr int kMaxVars = 8;

  Poly() = default;
  static Poly constant(long long c);
  static Poly variable(int i);
  static Poly linear(const std::vector<long long>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  long long constant_term() const;
  const std::map<Key, long long>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const { return Poly(*this) += o; }
  Poly operator-(const Poly& o) const { return Poly(*this) -= o; }
  Poly operator*(const Poly& o) const;
  Poly scaled(long long c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // Exact division; throws if the divisor does not divide.
  Poly divide_exact(const Poly& d) const;

  // Canonical text, variables named by `names`, highest monomial first.
  std::string str(const std::vector<std::string>& names) const;

  static int exponent(Key k, int var) {
    return static_cast<int>((k >> (8 * (kMaxVars - 1 - var))) & 0xff);
  }

 private:
  void add_term(Key k, long long c);
  std::map<Key, long long> terms_;
};

}  // namespace jdt
