// SPDX-License-Identifier: Apache-2.0
//
// Generalized Cartan matrices, symmetrizers, weights and roots.
//
// Convention: a[i][j] = <alpha_j, alpha_i^vee>.  Nodes are stored in
// increasing order of their external ids; every other module works with
// the internal index 0..rank-1 and converts at the I/O boundary.

#pragma once

#include <boost/rational.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace jdt {

using Rational = boost::rational<long long>;
using IntVec = std::vector<long long>;
using Matrix = std::vector<std::vector<int>>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CartanData {
  std::vector<int> nodes;           // external ids, strictly increasing
  Matrix a;                         // a[i][j] = <alpha_j, alpha_i^vee>
  std::vector<Rational> d;          // (alpha_i, alpha_i) = 2 d_i
  std::vector<std::string> labels;  // display names
  std::string tag;

  int rank() const { return static_cast<int>(nodes.size()); }
  int index(int node) const;  // throws Error on unknown id
  int node(int idx) const { return nodes.at(idx); }
  Rational length_sq(int i) const { return d[i] * 2; }
  bool commute(int i, int j) const { return i != j && a[i][j] == 0; }

  // Same Weyl group, dual root system.
  CartanData transpose() const;
  // Sub-diagram on the given internal indices (kept in order).
  CartanData restrict(const std::vector<int>& idx) const;
};

// Validates a and computes the symmetrizer (min d_i = 1 on each component).
CartanData make_cartan(std::vector<int> nodes, Matrix a,
                       std::string tag = "",
                       std::vector<std::string> labels = {});
std::vector<Rational> symmetrizer(const Matrix& a);

// Catalog: A1.., B2.., C2.., D4.., E6, E7, E8, F4, G2, "affine-E7-1"
// (nodes 0..7, extra node joined to 1) and "tw-affine-F4-2" (nodes 1..5,
// F4 plus node 5 joined to 4 by a simple bond).
CartanData load_diagram(const std::string& tag);
CartanData load_diagram_json(const std::string& text);
std::string diagram_to_json(const CartanData& c);

// True for connected or disconnected diagrams of finite type
// (positive definite symmetrized matrix).
bool is_finite_type(const CartanData& c);
bool is_finite_type(const CartanData& c, const std::vector<int>& idx);

// Weight in the mixed basis: sum w_i varpi_i + sum r_j alpha_j.
struct MixedWeight {
  IntVec w;
  IntVec r;
  bool operator==(const MixedWeight&) const = default;
};

MixedWeight fundamental(const CartanData& c, int i);
MixedWeight weight(const CartanData& c, const IntVec& coeffs);
// <x, alpha_i^vee>
long long pairing(const CartanData& c, const MixedWeight& x, int i);
// s_i(x) = x - <x, alpha_i^vee> alpha_i
MixedWeight reflect_weight(const CartanData& c, int i, const MixedWeight& x);
// Fundamental-weight coordinates <x, alpha_i^vee> for all i.
IntVec weight_coords(const CartanData& c, const MixedWeight& x);

// Roots as integer vectors over the simple roots.
long long root_pairing(const CartanData& c, const IntVec& beta, int i);
IntVec reflect_root(const CartanData& c, int i, IntVec beta);
Rational form(const CartanData& c, const IntVec& x, const IntVec& y);
bool is_real_root(const CartanData& c, const IntVec& beta);
// <x, beta^vee> for a real root beta.
Rational coroot_pairing(const CartanData& c, const MixedWeight& x,
                        const IntVec& beta);
Rational coroot_pairing(const CartanData& c, const IntVec& x,
                        const IntVec& beta);

}  // namespace jdt
