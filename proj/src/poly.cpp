// SPDX-License-Identifier: Apache-2.0

#include "jdt/poly.hpp"

#include "jdt/cartan.hpp"

#include <sstream>

namespace jdt {

namespace {

constexpr Poly::Key unit(int var) {
  return Poly::Key(1) << (8 * (Poly::kMaxVars - 1 - var));
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("polynomial coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("polynomial coefficient overflow");
  return r;
}

int total_degree(Poly::Key k) {
  int d = 0;
  for (int v = 0; v < Poly::kMaxVars; ++v) d += Poly::exponent(k, v);
  return d;
}

Poly::Key mul_keys(Poly::Key a, Poly::Key b) {
  for (int v = 0; v < Poly::kMaxVars; ++v)
    if (Poly::exponent(a, v) + Poly::exponent(b, v) > 255)
      throw Error("polynomial exponent overflow");
  return a + b;
}

}  // namespace

Poly Poly::constant(long long c) {
  Poly p;
  p.add_term(0, c);
  return p;
}

Poly Poly::variable(int i) {
  if (i < 0 || i >= kMaxVars) throw Error("too many polynomial variables");
  Poly p;
  p.add_term(unit(i), 1);
  return p;
}

Poly Poly::linear(const std::vector<long long>& coeffs) {
  if (coeffs.size() > static_cast<size_t>(kMaxVars))
    throw Error("too many polynomial variables");
  Poly p;
  for (size_t i = 0; i < coeffs.size(); ++i)
    p.add_term(unit(static_cast<int>(i)), coeffs[i]);
  return p;
}

void Poly::add_term(Key k, long long c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

int Poly::degree() const {
  int d = -1;
  for (auto& [k, c] : terms_) d = std::max(d, total_degree(k));
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (auto& [k, c] : terms_) {
    int e = total_degree(k);
    if (d >= 0 && e != d) return false;
    d = e;
  }
  return true;
}

long long Poly::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? 0 : it->second;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [k, c] : o.terms_) add_term(k, checked_mul(c, -1));
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [ka, ca] : terms_)
    for (auto& [kb, cb] : o.terms_) r.add_term(mul_keys(ka, kb), checked_mul(ca, cb));
  return r;
}

Poly Poly::scaled(long long c) const {
  Poly r;
  for (auto& [k, x] : terms_) r.add_term(k, checked_mul(x, c));
  return r;
}

Poly Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw Error("division by zero polynomial");
  Poly rem = *this, q;
  const auto lead = std::prev(d.terms_.end());  // lex-leading term
  while (!rem.is_zero()) {
    auto top = std::prev(rem.terms_.end());
    Key k = top->first;
    for (int v = 0; v < kMaxVars; ++v)
      if (exponent(k, v) < exponent(lead->first, v))
        throw Error("inexact polynomial division");
    if (top->second % lead->second != 0) throw Error("inexact polynomial division");
    Poly t;
    t.add_term(k - lead->first, top->second / lead->second);
    q += t;
    rem -= t * d;
  }
  return q;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    long long c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    long long a = c < 0 ? -c : c;
    bool mono = it->first != 0;
    if (a != 1 || !mono) os << a;
    bool need_star = a != 1 && mono;
    for (int v = 0; v < kMaxVars; ++v) {
      int e = exponent(it->first, v);
      if (e == 0) continue;
      if (need_star) os << "*";
      os << (v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v));
      if (e > 1) os << "^" << e;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace jdt
