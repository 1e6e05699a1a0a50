// SPDX-License-Identifier: Apache-2.0

#include "jdt/cartan.hpp"

#include <doctest.h>

using namespace jdt;

TEST_CASE("catalog matrices follow the a[i][j] = <alpha_j, alpha_i^vee> convention") {
  CartanData b3 = load_diagram("B3");
  // alpha_3 is short: <alpha_3, alpha_2^vee> = -1 and <alpha_2, alpha_3^vee> = -2.
  CHECK(b3.a[1][2] == -1);
  CHECK(b3.a[2][1] == -2);
  CHECK(b3.length_sq(2) * 2 == b3.length_sq(1));
  CartanData c3 = load_diagram("C3");
  CHECK(c3.length_sq(2) == c3.length_sq(1) * 2);
  CHECK(b3.transpose().a == c3.a);
  CartanData g2 = load_diagram("G2");
  CHECK(g2.length_sq(1) == g2.length_sq(0) * 3);
}

TEST_CASE("F4 root lengths: nodes 1 and 2 long, 3 and 4 short") {
  CartanData f4 = load_diagram("F4");
  CHECK(f4.length_sq(0) == f4.length_sq(1));
  CHECK(f4.length_sq(2) == f4.length_sq(3));
  CHECK(f4.length_sq(0) == f4.length_sq(2) * 2);
}

TEST_CASE("Kac-Moody catalog entries") {
  CartanData e7 = load_diagram("affine-E7-1");
  CHECK(e7.rank() == 8);
  CHECK(e7.nodes.front() == 0);
  CHECK(e7.a[e7.index(0)][e7.index(1)] == -1);
  CHECK_FALSE(is_finite_type(e7));
  CartanData tf = load_diagram("tw-affine-F4-2");
  CHECK(tf.rank() == 5);
  CHECK(tf.a[tf.index(5)][tf.index(4)] == -1);
  CHECK(tf.a[tf.index(4)][tf.index(5)] == -1);
  CHECK(tf.length_sq(tf.index(5)) == tf.length_sq(tf.index(3)));
  CHECK(tf.length_sq(tf.index(1)) == tf.length_sq(tf.index(5)) * 2);
  CHECK_FALSE(is_finite_type(tf));
}

TEST_CASE("finite type detection") {
  for (const char* t : {"A1", "A5", "B4", "C4", "D4", "D7", "E6", "E7", "E8", "F4", "G2"})
    CHECK(is_finite_type(load_diagram(t)));
  CHECK_FALSE(is_finite_type(make_cartan({1, 2}, {{2, -2}, {-2, 2}})));
  CHECK_FALSE(is_finite_type(make_cartan({1, 2}, {{2, -3}, {-3, 2}})));
}

TEST_CASE("symmetrizer makes d_i a_ij symmetric") {
  for (const char* t : {"B3", "C4", "F4", "G2", "tw-affine-F4-2"}) {
    CartanData c = load_diagram(t);
    for (int i = 0; i < c.rank(); ++i)
      for (int j = 0; j < c.rank(); ++j) CHECK(c.d[i] * c.a[i][j] == c.d[j] * c.a[j][i]);
  }
}

TEST_CASE("invalid matrices are rejected") {
  CHECK_THROWS_AS(make_cartan({1, 2}, {{2, -1}, {0, 2}}), Error);
  CHECK_THROWS_AS(make_cartan({1, 2}, {{2, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(make_cartan({1, 2}, {{1, 0}, {0, 2}}), Error);
  CHECK_THROWS_AS(load_diagram("Q9"), Error);
}

TEST_CASE("diagram JSON round trip, nodes reordered") {
  CartanData c = load_diagram_json(R"({"nodes":[2,1],"a":[[2,-1],[-2,2]],"tag":"x"})");
  CHECK(c.nodes == std::vector<int>{1, 2});
  CHECK(c.a[0][1] == -2);
  CartanData d = load_diagram_json(diagram_to_json(c));
  CHECK(d.a == c.a);
  CHECK(d.nodes == c.nodes);
}

TEST_CASE("restrict keeps the order of the given indices") {
  CartanData e6 = load_diagram("E6");
  CartanData d = e6.restrict({1, 2, 3, 4});
  CHECK(d.nodes == std::vector<int>{2, 3, 4, 5});
  CHECK(is_finite_type(d));
}

TEST_CASE("roots: reflections and real root test") {
  CartanData a2 = load_diagram("A2");
  IntVec r = reflect_root(a2, 0, {0, 1});
  CHECK(r == IntVec{1, 1});
  CHECK(is_real_root(a2, r));
  CHECK_FALSE(is_real_root(a2, {1, 2}));
  CartanData g2 = load_diagram("G2");
  CHECK(is_real_root(g2, {3, 2}));
  CHECK(coroot_pairing(g2, IntVec{1, 0}, IntVec{1, 0}) == Rational(2));
}
