// SPDX-License-Identifier: Apache-2.0

#include "jdt/weyl.hpp"

#include <doctest.h>

#include <set>

using namespace jdt;

namespace {

std::vector<WeylElement> all_elements(const CartanData& c, int max_len) {
  std::vector<WeylElement> out{identity(c)};
  std::set<IntVec> seen{out[0].k};
  for (size_t i = 0; i < out.size(); ++i)
    for (int s = 0; s < c.rank(); ++s) {
      WeylElement v = left_mult(c, s, out[i]);
      if (v.length() <= max_len && seen.insert(v.k).second) out.push_back(v);
    }
  return out;
}

// Subword criterion on the canonical word of w, by exhaustion.
bool bruhat_by_subwords(const CartanData& c, const WeylElement& u, const WeylElement& w) {
  const int n = w.length();
  for (long m = 0; m < (1L << n); ++m) {
    if (__builtin_popcountl(m) != u.length()) continue;
    Word sub;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) sub.push_back(w.word[i]);
    if (is_reduced(c, sub) && canonicalize(c, sub) == u) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Weyl group orders") {
  CHECK(all_elements(load_diagram("A3"), 100).size() == 24);
  CHECK(all_elements(load_diagram("B3"), 100).size() == 48);
  CHECK(all_elements(load_diagram("D4"), 100).size() == 192);
  CHECK(all_elements(load_diagram("G2"), 100).size() == 12);
}

TEST_CASE("canonical words are lexicographically least reduced words") {
  CartanData a3 = load_diagram("A3");
  CHECK(canonicalize(a3, {2, 0}).word == Word{0, 2});
  CHECK(canonicalize(a3, {1, 0, 1}).word == Word{0, 1, 0});
  CHECK_FALSE(is_reduced(a3, {0, 0}));
  CHECK(is_reduced(a3, {0, 1, 0}));
}

TEST_CASE("group laws") {
  CartanData c = load_diagram("B3");
  auto els = all_elements(c, 100);
  for (size_t i = 0; i < els.size(); i += 5)
    for (size_t j = 0; j < els.size(); j += 7) {
      const WeylElement& x = els[i];
      const WeylElement& y = els[j];
      CHECK(multiply(c, x, inverse(c, x)) == identity(c));
      WeylElement xy = multiply(c, x, y);
      CHECK(inverse(c, xy) == multiply(c, inverse(c, y), inverse(c, x)));
      CHECK(xy.length() <= x.length() + y.length());
    }
}

TEST_CASE("Bruhat order agrees with the subword criterion") {
  for (const char* t : {"A3", "B3", "G2"}) {
    CartanData c = load_diagram(t);
    auto els = all_elements(c, 6);
    for (const WeylElement& w : els)
      for (const WeylElement& u : els) CHECK(bruhat_leq(c, u, w) == bruhat_by_subwords(c, u, w));
  }
}

TEST_CASE("Bruhat order in an affine group agrees with subwords") {
  CartanData c = make_cartan({0, 1, 2}, {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  auto els = all_elements(c, 5);
  for (const WeylElement& w : els)
    for (const WeylElement& u : els) CHECK(bruhat_leq(c, u, w) == bruhat_by_subwords(c, u, w));
}

TEST_CASE("minimal coset representatives") {
  CartanData c = load_diagram("A3");
  WeylElement w = canonicalize(c, {1, 0, 2, 1});
  CHECK(is_min_rep(c, w, {1}));
  WeylElement v = canonicalize(c, {1, 0, 2});
  CHECK_FALSE(is_min_rep(c, v, {1}));
  CHECK(min_coset_rep(c, v, {1}).word == Word{1});
}

TEST_CASE("G(2,4): Betti numbers 1,1,2,1,1") {
  Strata s = enumerate_min_reps(load_diagram("A3"), {0, 1, 0}, 10);
  CHECK(s.exhausted);
  CHECK(s.counts() == std::vector<size_t>{1, 1, 2, 1, 1});
}

TEST_CASE("A2/P1 enumeration terminates at length 2") {
  Strata s = enumerate_min_reps(load_diagram("A2"), {1, 0}, 9);
  CHECK(s.exhausted);
  CHECK(s.max_len() == 2);
}

TEST_CASE("Betti tables of exceptional G/P") {
  auto counts = [](const char* t, int node, int len) {
    CartanData c = load_diagram(t);
    IntVec lam(c.rank(), 0);
    lam[c.index(node)] = 1;
    return enumerate_min_reps(c, lam, len).counts();
  };
  using V = std::vector<size_t>;
  CHECK(counts("F4", 1, 8) == V{1, 1, 1, 1, 2, 2, 2, 2, 2});
  CHECK(counts("E6", 1, 8) == V{1, 1, 1, 1, 2, 2, 2, 2, 3});
  CHECK(counts("E7", 1, 16).back() == 7);
  CHECK(counts("E7", 7, 13).back() == 3);
  CHECK(counts("E8", 8, 28).back() == 8);
  // Finite orbits: totals are |W/W_P|.
  CHECK(enumerate_min_reps(load_diagram("E6"), {1, 0, 0, 0, 0, 0}, 40).exhausted);
  V e6 = counts("E6", 1, 40);
  size_t total = 0;
  for (size_t x : e6) total += x;
  CHECK(total == 27);
}

TEST_CASE("affine orbits are truncated, not exhausted") {
  Strata s = enumerate_min_reps(load_diagram("affine-E7-1"), {0, 0, 1, 0, 0, 0, 0, 0}, 8);
  CHECK_FALSE(s.exhausted);
  CHECK(s.max_len() == 8);
}

TEST_CASE("act_on_weight tracks w(Lambda)") {
  CartanData c = load_diagram("A2");
  CHECK(act_on_weight(c, {0}, {1, 0}) == IntVec{1, 0});
  CHECK(act_on_weight(c, {1, 0}, {1, 0}) == IntVec{1, 1});
}
