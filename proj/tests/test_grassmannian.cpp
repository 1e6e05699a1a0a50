// SPDX-License-Identifier: Apache-2.0
//
// G(2,4) and G(2,5): taquin rule, localization oracle and a brute-force
// Littlewood-Richardson count agree on every triple.

#include "lr.hpp"

#include <doctest.h>

using namespace jdt;
using namespace jdt::testing;

TEST_CASE("Littlewood-Richardson counter sanity") {
  CHECK(lr_count({1, 0}, {1, 0}, {2, 0}) == 1);
  CHECK(lr_count({1, 0}, {1, 0}, {1, 1}) == 1);
  CHECK(lr_count({2, 1}, {2, 1}, {3, 3}) == 1);
  CHECK(lr_count({2, 1, 0}, {2, 1, 0}, {3, 2, 1}) == 2);
  CHECK(lr_count({1, 0}, {1, 0}, {3, 0}) == 0);
}

TEST_CASE("ideal partitions of the G(2,5) heap") {
  CartanData c = load_diagram("A4");
  Context ctx = make_context(c, 2, Mode::minuscule);
  auto els = context_elements(ctx, 64);
  Heap h = context_heap(ctx, els.back().front().word);
  CHECK(partition_of(h, h.poset.all()) == Partition{3, 3});
  for (Mask m : h.poset.ideals()) {
    Partition p = partition_of(h, m);
    CHECK(p[0] >= p[1]);
    CHECK(p[0] + p[1] == popcount(m));
  }
}

TEST_CASE("G(2,4): taquin, oracle and LR agree") {
  GrassmannianReport r = compare_grassmannian(4);
  CHECK(r.mismatches == 0);
  CHECK(r.nonzero > 0);
}

TEST_CASE("G(2,5): taquin, oracle and LR agree") {
  GrassmannianReport r = compare_grassmannian(5);
  CHECK(r.mismatches == 0);
  CHECK(r.nonzero > 0);
}
