// SPDX-License-Identifier: Apache-2.0
//
// Skew standard tableaux in a colored poset, jeu de taquin slides,
// rectification, the coefficients t and m, and the product of ideals.

#pragma once

#include "jdt/heap.hpp"

#include <map>
#include <random>
#include <vector>

namespace jdt {

// A standard tableau of skew shape outer/inner: pos[k] is the element
// carrying label k (labels 0-based and increasing along the order).
struct Tableau {
  Mask inner = 0;
  Mask outer = 0;
  std::vector<int> pos;
  Mask labeled() const { return outer & ~inner; }
};

bool is_standard(const Poset& p, const Tableau& t);
// Elements of inner lying below some labeled element and maximal among
// those: the admissible starting points of a slide.
Mask slide_candidates(const Poset& p, const Tableau& t);
Tableau slide(const Poset& p, const Tableau& t, int x);
// With rng == nullptr the highest-index candidate is used at each step.
Tableau rectify(const Poset& p, Tableau t, std::mt19937_64* rng = nullptr);
// The tableau of straight shape mu labeled along the index order.
Tableau canonical_tableau(const Poset& p, Mask mu);
bool is_canonical(const Tableau& t);

// Calls f on every standard tableau of shape outer/inner.
template <class F>
void for_each_tableau(const Poset& p, Mask inner, Mask outer, F&& f);

// For all mu: the number of standard tableaux of shape nu/lambda whose
// rectification is the canonical tableau of shape mu.
std::map<Mask, long long> rectification_counts(const Poset& p, Mask lambda,
                                               Mask nu);
long long t_coeff(const Poset& p, Mask lambda, Mask mu, Mask nu);

// m-values depend only on the colors of the heaps involved.
Rational m_value(const Context& ctx, const Poset& p, Mask u);
Rational m_coeff(const Context& ctx, const Poset& p, Mask u, Mask v, Mask w);
// Chevalley multiplicity for adding an element of color i.
Rational m_chevalley(const Context& ctx, int i);

struct ProductTerm {
  Mask nu;
  WeylElement w;
  long long t;
  Rational m;
  long long coeff;  // t * m, asserted integral
};

// x_lambda (.) x_mu over the ideals of `ambient` (a heap of the context).
std::vector<ProductTerm> taquin_product(const Context& ctx, const Heap& ambient,
                                        Mask lambda, Mask mu);

struct RecursionCheck {
  bool admissible = false;
  Rational lhs = 0, rhs = 0;
  bool holds() const { return admissible && lhs == rhs; }
};

// Taquin recursion for ideals x <= u <= w and v of H(w) (masks in H(w)).
RecursionCheck verify_taquin_recursion(const Context& ctx, const Heap& hw,
                                       Mask x, Mask u, Mask v);

// Implementation of the template.
template <class F>
void for_each_tableau(const Poset& p, Mask inner, Mask outer, F&& f) {
  Tableau t{inner, outer, {}};
  const Mask cells = outer & ~inner;
  t.pos.reserve(popcount(cells));
  auto rec = [&](auto& self, Mask placed) -> void {
    if (placed == cells) {
      f(static_cast<const Tableau&>(t));
      return;
    }
    for (Mask r = cells & ~placed; r; r &= r - 1) {
      int e = __builtin_ctzll(r);
      if (p.below(e) & cells & ~placed) continue;
      t.pos.push_back(e);
      self(self, placed | bit(e));
      t.pos.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace jdt
