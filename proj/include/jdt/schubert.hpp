// SPDX-License-Identifier: Apache-2.0
//
// Cohomological side: Chevalley covers and multiplicities, degrees,
// Poincare duality, restrictions of equivariant Schubert classes to
// fixed points and structure constants by triangular solving.

#pragma once

#include "jdt/poly.hpp"
#include "jdt/weyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace jdt {

using BigInt = boost::multiprecision::cpp_int;
// Finitely supported combination of Schubert classes keyed by the
// canonical word of the minimal coset representative.
using Expansion = std::map<Word, BigInt>;

struct Cover {
  int from;          // index in level l
  int to;            // index in level l + 1
  IntVec root;       // gamma with to = s_gamma from
  long long coeff;   // <from(Lambda), gamma^vee>
};

class Schubert {
 public:
  Schubert(CartanData c, IntVec lambda, int max_len);

  const CartanData& cartan() const { return c_; }
  const Strata& strata() const { return s_; }
  const IntVec& lambda() const { return s_.lambda; }
  int max_len() const { return s_.max_len(); }
  bool finite() const { return s_.exhausted; }
  const std::vector<Cover>& covers(int l) const { return covers_.at(l); }
  // Level and index of a minimal coset representative (by its word).
  std::pair<int, int> locate(const Word& w) const;
  const Coset& at(int l, int i) const { return s_.level.at(l).at(i); }

  // h * e, with h the class of s_d (Chevalley formula).
  Expansion chevalley_multiply(const Expansion& e, bool* truncated = nullptr) const;
  // <h^{l(w)}, sigma_w>: weighted chains from the identity.
  BigInt homology_degree(const Word& w) const;
  // <h^{N - l(w)} sigma^w, [X]> in finite type: weighted chains to the top.
  BigInt cohomology_degree(const Word& w) const;
  Word poincare_dual(const Word& u) const;
  BigInt self_product_degree(const Word& u) const;

  // sigma^u restricted to the fixed point w (u, w minimal representatives).
  Poly restriction(const Word& u, const Word& w) const;
  // All nonzero restrictions at w, keyed by u.
  const std::map<Word, Poly>& restrictions_at(const Word& w) const;
  // Equivariant expansion of sigma^u sigma^v up to length l(u) + l(v).
  std::map<Word, Poly> equivariant_product(const Word& u, const Word& v) const;
  // Ordinary structure constants c_{u,v}^w with l(w) = l(u) + l(v).
  Expansion structure_constants(const Word& u, const Word& v,
                                bool* truncated = nullptr) const;
  BigInt structure_constant(const Word& u, const Word& v, const Word& w) const;

  std::vector<std::string> variable_names() const;

 private:
  CartanData c_;
  Strata s_;
  std::vector<std::vector<Cover>> covers_;
  mutable std::vector<std::vector<BigInt>> hom_, cohom_;
  // Fill-once cache of restrictions, keyed by fixed point.
  mutable std::mutex mu_;
  mutable std::map<Word, std::unique_ptr<std::map<Word, Poly>>> table_;
};

// Restriction formula on the canonical word of w (any Weyl element),
// returning sigma^y|_w for every y below w in the full flag variety.
std::map<Word, Poly> billey_restrictions(const CartanData& c, const WeylElement& w);

}  // namespace jdt
