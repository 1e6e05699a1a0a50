// SPDX-License-Identifier: Apache-2.0

#include "jdt/taquin.hpp"

#include <doctest.h>

using namespace jdt;

namespace {

Context ctx_of(const char* t, int node, Mode m) { return make_context(load_diagram(t), node, m); }

Heap top_heap(const Context& ctx, int len) {
  auto els = context_elements(ctx, len);
  return context_heap(ctx, els.back().front().word);
}

long long count_tableaux(const Poset& p, Mask inner, Mask outer) {
  long long n = 0;
  for_each_tableau(p, inner, outer, [&](const Tableau&) { ++n; });
  return n;
}

}  // namespace

TEST_CASE("standard tableaux of a 2x2 square") {
  Heap h = top_heap(ctx_of("A3", 2, Mode::minuscule), 4);
  REQUIRE(h.size() == 4);
  CHECK(count_tableaux(h.poset, 0, h.poset.all()) == 2);
  for_each_tableau(h.poset, 0, h.poset.all(), [&](const Tableau& t) {
    CHECK(is_standard(h.poset, t));
    CHECK(rectify(h.poset, t).pos == t.pos);
  });
}

TEST_CASE("a slide moves the vacancy outward") {
  Heap h = top_heap(ctx_of("A3", 2, Mode::minuscule), 4);
  const Poset& p = h.poset;
  // Inner shape is the bottom element; two labels sit on its covers.
  Mask inner = bit(0);
  Mask outer = p.down_closure(bit(1) | bit(2));
  int got = 0;
  for_each_tableau(p, inner, outer, [&](const Tableau& t) {
    ++got;
    Tableau r = rectify(p, t);
    CHECK(r.inner == 0);
    CHECK(popcount(r.outer) == 2);
    CHECK(is_standard(p, r));
  });
  CHECK(got == 2);
}

TEST_CASE("rectification is independent of the slide order") {
  Heap h = top_heap(ctx_of("E6", 1, Mode::minuscule), 16);
  const Poset& p = h.poset;
  std::mt19937_64 rng(7);
  auto ideals = p.ideals();
  int checked = 0;
  for (Mask lam : ideals) {
    if (popcount(lam) != 5) continue;
    for_each_tableau(p, lam, p.all(), [&](const Tableau& t) {
      if (checked > 400) return;
      ++checked;
      Tableau a = rectify(p, t);
      Tableau b = rectify(p, t, &rng);
      CHECK(a.pos == b.pos);
    });
  }
  CHECK(checked > 0);
}

TEST_CASE("t coefficients in G(2,4)") {
  Context ctx = ctx_of("A3", 2, Mode::minuscule);
  Heap h = top_heap(ctx, 4);
  const Poset& p = h.poset;
  Mask box = bit(0);
  Mask row = p.down_closure(bit(1));
  Mask col = p.down_closure(bit(2));
  // sigma_1^2 = sigma_2 + sigma_11, sigma_2^2 = sigma_11^2 = sigma_22, sigma_2 sigma_11 = 0.
  CHECK(t_coeff(p, box, box, row) == 1);
  CHECK(t_coeff(p, box, box, col) == 1);
  CHECK(t_coeff(p, row, col, p.all()) == 0);
  CHECK(t_coeff(p, row, row, p.all()) == 1);
  CHECK(t_coeff(p, col, col, p.all()) == 1);
  CHECK(t_coeff(p, 0, row, row) == 1);
  CHECK(t_coeff(p, 0, row, col) == 0);
}

TEST_CASE("m values are 1 in minuscule mode") {
  Context ctx = ctx_of("F4", 4, Mode::minuscule);
  Heap h = top_heap(ctx, 11);
  for (Mask u : h.poset.ideals()) CHECK(m_value(ctx, h.poset, u) == Rational(1));
}

TEST_CASE("cominuscule m values in F4/P1") {
  Context ctx = ctx_of("F4", 1, Mode::cominuscule);
  WeylElement w = generated_element(ctx, parse_generators("(1,2),(3,2)"));
  Heap h = context_heap(ctx, w.word);
  Mask u = 0, v = 0;
  REQUIRE(element_to_ideal(ctx.cartan, h, generated_element(ctx, parse_generators("(2,2)")), &u));
  REQUIRE(element_to_ideal(ctx.cartan, h, generated_element(ctx, parse_generators("(4,1)")), &v));
  // Short colors carry a factor 2 each.
  CHECK(m_chevalley(ctx, 0) == Rational(1));
  CHECK(m_chevalley(ctx, 2) == Rational(2));
  Rational m = m_coeff(ctx, h.poset, u, v, h.poset.all());
  CHECK(m.denominator() == 1);
  CHECK(m >= Rational(1));
}

TEST_CASE("product with the identity ideal") {
  Context ctx = ctx_of("D4", 1, Mode::minuscule);
  Heap h = top_heap(ctx, 6);
  for (Mask v : h.poset.ideals()) {
    auto terms = taquin_product(ctx, h, 0, v);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].nu == v);
    CHECK(terms[0].coeff == 1);
  }
}

TEST_CASE("taquin recursion holds on admissible instances") {
  Context ctx = ctx_of("D4", 1, Mode::minuscule);
  Heap h = top_heap(ctx, 6);
  int admissible = 0;
  auto ideals = h.poset.ideals();
  for (Mask x : ideals)
    for (Mask u : ideals)
      for (Mask v : ideals) {
        if ((x & ~u) || popcount(u) + popcount(v) != h.size()) continue;
        RecursionCheck rc = verify_taquin_recursion(ctx, h, x, u, v);
        if (!rc.admissible) continue;
        ++admissible;
        CHECK(rc.lhs == rc.rhs);
      }
  CHECK(admissible > 0);
}
