// SPDX-License-Identifier: Apache-2.0

#include "jdt/heap.hpp"

#include <doctest.h>

#include <set>

using namespace jdt;

namespace {

Context ctx_of(const char* t, int node, Mode m) { return make_context(load_diagram(t), node, m); }

size_t total(const std::vector<std::vector<WeylElement>>& els) {
  size_t n = 0;
  for (auto& l : els) n += l.size();
  return n;
}

}  // namespace

TEST_CASE("minuscule G/P: every minimal representative is in the context") {
  CHECK(total(context_elements(ctx_of("E6", 1, Mode::minuscule), 64)) == 27);
  CHECK(total(context_elements(ctx_of("E7", 7, Mode::minuscule), 64)) == 56);
  CHECK(total(context_elements(ctx_of("A3", 2, Mode::minuscule), 64)) == 6);
  CHECK(total(context_elements(ctx_of("D5", 5, Mode::minuscule), 64)) == 16);
  // Cominuscule B3/P1 (quadric) and minuscule C3/P1 (projective space).
  CHECK(total(context_elements(ctx_of("B3", 1, Mode::cominuscule), 64)) == 6);
  CHECK(total(context_elements(ctx_of("C3", 1, Mode::minuscule), 64)) == 6);
}

TEST_CASE("F4/P1 cominuscule context: two elements of length 7") {
  auto els = context_elements(ctx_of("F4", 1, Mode::cominuscule), 7);
  REQUIRE(els.size() == 8);
  CHECK(els[7].size() == 2);
  for (auto& w : els[7]) CHECK(context_heap(ctx_of("F4", 1, Mode::cominuscule), w.word).size() == 7);
}

TEST_CASE("heap of a fully commutative element") {
  CartanData a3 = load_diagram("A3");
  CHECK(is_fully_commutative(a3, {1, 0, 2, 1}));
  CHECK_FALSE(is_fully_commutative(a3, {0, 1, 0}));
  Heap h = build_heap(a3, {1, 0, 2, 1});
  CHECK(h.size() == 4);
  // Element 0 is the last letter of the canonical word.
  CHECK(h.poset.color(0) == 1);
  CHECK(h.poset.element(1, 2) == 3);
  CHECK(h.poset.less(0, 3));
  CHECK_FALSE(h.poset.less(1, 2));
  CHECK(h.poset.ideals().size() == 6);
}

TEST_CASE("ideals of H(w) are in bijection with the Bruhat interval [e, w] in W^P") {
  for (auto [t, node, mode] : std::vector<std::tuple<const char*, int, Mode>>{
           {"E6", 1, Mode::minuscule}, {"D5", 5, Mode::minuscule},
           {"F4", 1, Mode::cominuscule}, {"F4", 4, Mode::minuscule}}) {
    Context ctx = ctx_of(t, node, mode);
    const CartanData& c = ctx.cartan;
    auto els = context_elements(ctx, 10);
    std::vector<WeylElement> flat;
    for (auto& l : els) flat.insert(flat.end(), l.begin(), l.end());
    for (const WeylElement& w : flat) {
      Heap h = context_heap(ctx, w.word);
      std::set<Word> from_ideals;
      for (Mask m : h.poset.ideals()) {
        WeylElement u = ideal_to_element(c, h, m);
        CHECK(u.length() == popcount(m));
        Mask back = 0;
        CHECK(element_to_ideal(c, h, u, &back));
        CHECK(back == m);
        from_ideals.insert(u.word);
      }
      std::set<Word> below;
      for (const WeylElement& u : flat)
        if (bruhat_leq(c, u, w)) below.insert(u.word);
      CHECK(from_ideals == below);
      // Containment of ideals is the Bruhat order.
      for (Mask a : h.poset.ideals())
        for (Mask b : h.poset.ideals())
          CHECK(((a & ~b) == 0) ==
                bruhat_leq(c, ideal_to_element(c, h, a), ideal_to_element(c, h, b)));
    }
  }
}

TEST_CASE("generated elements follow the listed generators") {
  Context ctx = ctx_of("F4", 1, Mode::cominuscule);
  WeylElement s42 = generated_element(ctx, parse_generators("(4,1)"));
  CHECK(s42.length() == 4);
  WeylElement s41 = generated_element(ctx, parse_generators("[[\"alpha_2\",2]]"));
  CHECK(s41.length() == 4);
  CHECK_FALSE(s41 == s42);
  Heap h = context_heap(ctx, s41.word);
  CHECK(popcount(peaks(h)) == 1);
  CHECK(h.poset.color(__builtin_ctzll(peaks(h))) == 1);
  CHECK_THROWS(parse_generators("nonsense"));
}

TEST_CASE("root lengths: minuscule heaps avoid colors shorter than the marked root") {
  Context ctx = ctx_of("F4", 4, Mode::minuscule);
  for (auto& l : context_elements(ctx, 11))
    for (auto& w : l) CHECK(root_lengths_ok(ctx, build_heap(ctx.cartan, w.word)));
  Context co = ctx_of("F4", 1, Mode::cominuscule);
  for (auto& l : context_elements(co, 15))
    for (auto& w : l) CHECK(root_lengths_ok(co, build_heap(co.cartan, w.word)));
  // A short color is rejected when the marked root is long.
  Context m1 = ctx_of("F4", 1, Mode::minuscule);
  CHECK(root_lengths_ok(m1, build_heap(m1.cartan, {1, 0})));
  CHECK_FALSE(root_lengths_ok(m1, build_heap(m1.cartan, {2, 1, 0})));
}

TEST_CASE("peaks and the recursion support") {
  Context ctx = ctx_of("A3", 2, Mode::minuscule);
  Heap h = context_heap(ctx, canonicalize(ctx.cartan, {1, 0, 2, 1}).word);
  CHECK(popcount(peaks(h)) == 1);
  CHECK(recursion_support(ctx.cartan, h) == std::vector<int>{0, 2});
}

TEST_CASE("finite type heaps are slant-finite") {
  Context ctx = ctx_of("E6", 1, Mode::minuscule);
  for (auto& l : context_elements(ctx, 16))
    for (auto& w : l) CHECK(is_slant_finite_dimensional(ctx.cartan, context_heap(ctx, w.word)));
}

TEST_CASE("slant decomposition cuts at single non-maximal colors") {
  Context ctx = ctx_of("tw-affine-F4-2", 1, Mode::cominuscule);
  WeylElement w = generated_element(ctx, parse_generators("(1,2),(3,2),(5,1)"));
  Heap h = context_heap(ctx, w.word);
  auto comps = slant_decompose(ctx.cartan, h);
  size_t colors = 0;
  for (auto& c : comps) colors += c.size();
  CHECK(colors == 5);
}

TEST_CASE("isomorphic heaps under a color bijection") {
  CartanData a3 = load_diagram("A3");
  Heap x = build_heap(a3, {0, 1});
  Heap y = build_heap(a3, {2, 1});
  CHECK(heaps_isomorphic(x.poset, y.poset));
  CHECK_FALSE(heaps_isomorphic(x.poset, build_heap(a3, {0, 2}).poset));
}

TEST_CASE("DOT export lists every element once") {
  Context ctx = ctx_of("F4", 1, Mode::cominuscule);
  auto els = context_elements(ctx, 7);
  std::string dot = heap_to_dot(ctx.cartan, context_heap(ctx, els[7][0].word), "h");
  size_t n = 0;
  for (size_t p = dot.find("label="); p != std::string::npos; p = dot.find("label=", p + 1)) ++n;
  CHECK(n == 7);
}

TEST_CASE("poset system on D7/P6 with attachments at the colors 1 and 7") {
  // D7 with node 8 joined to 1 and node 9 joined to 7.
  Matrix a(9, std::vector<int>(9, 0));
  auto bond = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
  for (int i = 1; i <= 9; ++i) a[i - 1][i - 1] = 2;
  for (int i = 1; i < 5; ++i) bond(i, i + 1);
  bond(5, 6);
  bond(5, 7);
  bond(1, 8);
  bond(7, 9);
  CartanData c = make_cartan({1, 2, 3, 4, 5, 6, 7, 8, 9}, a, "D7+2");
  Context d7 = ctx_of("D7", 6, Mode::minuscule);
  auto els = context_elements(d7, 64);
  Word top = els.back().front().word;
  PosetSystem sys = build_poset_system(c, top, {{0, {7}}, {6, {8}}});
  CHECK(sys.s0 == std::vector<int>{0, 6});
  CHECK(sys.entries.size() == 9);
  std::set<Word> distinct;
  for (auto& e : sys.entries) distinct.insert(e.word);
  CHECK(distinct.size() == 6);
  for (auto& a1 : sys.entries)
    for (auto& b1 : sys.entries)
      if (PosetSystem::index_leq(a1, b1)) CHECK(sys.embeds(c, a1, b1));
}

TEST_CASE("poset system without attachments collapses to P0 restrictions") {
  Context d4 = ctx_of("D4", 1, Mode::minuscule);
  auto els = context_elements(d4, 64);
  PosetSystem sys = build_poset_system(d4.cartan, els.back().front().word, {});
  for (auto& e : sys.entries) CHECK(e.s2.empty());
}
