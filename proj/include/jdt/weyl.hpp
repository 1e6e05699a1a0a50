// SPDX-License-Identifier: Apache-2.0
//
// Weyl group elements, reduced words, Bruhat order and the stratified
// enumeration of minimal coset representatives.
//
// An element w is stored through its canonical word (lexicographically
// least reduced word, internal node indices) and the vector k with
// w(rho) = rho - sum k_i alpha_i, which determines w faithfully.

#pragma once

#include "jdt/cartan.hpp"

#include <map>
#include <vector>

namespace jdt {

using Word = std::vector<int>;

struct WeylElement {
  Word word;  // canonical reduced word, internal indices
  IntVec k;   // w(rho) = rho - sum k_i alpha_i

  int length() const { return static_cast<int>(word.size()); }
  bool operator==(const WeylElement& o) const { return k == o.k; }
  bool operator<(const WeylElement& o) const { return word < o.word; }
};

// <w(rho), alpha_i^vee> for all i.
IntVec rho_pairings(const CartanData& c, const IntVec& k);
IntVec rho_vector(const CartanData& c, const Word& word);
bool is_reduced(const CartanData& c, const Word& word);
WeylElement element_from_rho(const CartanData& c, const IntVec& k);
WeylElement canonicalize(const CartanData& c, const Word& word);
WeylElement identity(const CartanData& c);
WeylElement multiply(const CartanData& c, const WeylElement& x,
                     const WeylElement& y);
WeylElement inverse(const CartanData& c, const WeylElement& x);
// s_i * x
WeylElement left_mult(const CartanData& c, int i, const WeylElement& x);
std::vector<int> left_descents(const CartanData& c, const WeylElement& x);
std::vector<int> right_descents(const CartanData& c, const WeylElement& x);
bool bruhat_leq(const CartanData& c, const WeylElement& u,
                const WeylElement& w);

// Parabolic subgroups are generated by the unmarked nodes.
WeylElement min_coset_rep(const CartanData& c, const WeylElement& w,
                          const std::vector<int>& marked);
bool is_min_rep(const CartanData& c, const WeylElement& w,
                const std::vector<int>& marked);

// w(Lambda) = Lambda - sum lam_i alpha_i.
IntVec act_on_weight(const CartanData& c, const Word& word,
                     const IntVec& lambda);

struct Coset {
  WeylElement w;
  IntVec lam;  // w(Lambda) = Lambda - sum lam_i alpha_i
};

struct Strata {
  IntVec lambda;                          // dominant weight coordinates
  std::vector<std::vector<Coset>> level;  // level[l] sorted by word
  bool exhausted = false;                 // finite orbit fully enumerated
  std::map<IntVec, std::pair<int, int>> by_lam;

  const Coset* find(const IntVec& lam) const;
  const Coset* find(const WeylElement& w) const { return find_word(w.word); }
  const Coset* find_word(const Word& word) const;
  CartanData cartan;
  int max_len() const { return static_cast<int>(level.size()) - 1; }
  std::vector<size_t> counts() const;
};

// Breadth-first enumeration of W^P via the orbit of a dominant Lambda.
Strata enumerate_min_reps(const CartanData& c, const IntVec& lambda,
                          int max_len);

}  // namespace jdt
