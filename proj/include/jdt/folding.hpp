// SPDX-License-Identifier: Apache-2.0
//
// Diagram automorphisms, folded diagrams, the embedding of the folded
// Weyl group, the map on minuscule Schubert classes, and a constraint
// solver for push-forwards between folded and ambient spaces.

#pragma once

#include "jdt/heap.hpp"
#include "jdt/schubert.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace jdt {

struct FoldedPair {
  CartanData ambient;
  CartanData folded;                    // nodes 1..k, one per orbit
  std::vector<std::vector<int>> orbit;  // orbit[m]: ambient internal indices
  std::vector<int> orbit_of;            // ambient index -> folded index
  std::vector<int> theta;               // ambient automorphism (indices)

  Word lift(const Word& folded_word) const;
  Word apply_theta(const Word& ambient_word) const;
};

// Orbits are given as lists of ambient node ids; they must be pairwise
// disconnected inside an orbit and come from a diagram automorphism.
FoldedPair fold(const CartanData& ambient,
                const std::vector<std::vector<int>>& orbits);

// Folding spec JSON: {"ambient":"E6","orbits":[[1,6],...],
// "marked_folded":1, "marked_ambient":1 (optional)}.
struct FoldingSpec {
  FoldedPair pair;
  int marked_folded = 0;   // folded internal index
  int marked_ambient = 0;  // ambient internal index
};
FoldingSpec load_folding_spec(const std::string& json_text);
FoldingSpec make_folding_spec(const CartanData& ambient,
                              const std::vector<std::vector<int>>& orbits,
                              int marked_folded_node, int marked_ambient_node);

// The unique minimal coset representative of lift(w) for the ambient
// marked node; asserts equal length and isomorphic heaps.
WeylElement unfold_minuscule(const FoldingSpec& f, const Word& w,
                             std::vector<int>* heap_iso = nullptr);
Expansion pushforward_minuscule(const FoldingSpec& f, const Word& w);
// Pull-back of the ambient class of unfold(w); refuses when some class
// of that degree on the folded side is not minuscule.
Expansion pullback_minuscule(const FoldingSpec& f, const Word& w);
// Sum of the classes s_j unfold(w) over the ambient nodes j in the orbit
// of the folded node beta (w minuscule, s_beta w one longer).
Expansion pushforward_extension(const FoldingSpec& f, const Word& w,
                                int beta_folded);

// Push-forward solver.
struct CapFilter {
  Word ambient_class;  // cohomology class tau^x
  int degree;          // applies to images of this degree
};

struct PushforwardProblem {
  const Schubert* folded = nullptr;   // folded space, its own Lambda
  const Schubert* ambient = nullptr;  // ambient space
  const FoldedPair* pair = nullptr;
  int lo = 0, hi = 0;                 // degree range of unknown classes
  std::map<Word, Expansion> known;    // fixed images
  std::vector<Word> unknown;          // empty: every class in [lo, hi]
  // The degree equation always applies; it bounds the search.
  bool use_projection = true;
  std::vector<CapFilter> cap_filters;
  // Pairs (a, b) of ambient cohomology classes: the pull-back is a ring
  // map, so pullback(a) pullback(b) = pullback(a b).
  std::vector<std::pair<Word, Word>> products;
  // Ambient structure constants c_{a,b}^x (defaults to the oracle).
  std::function<Expansion(const Word&, const Word&)> ambient_product;
  std::size_t max_solutions = 100000;
};

using Assignment = std::map<Word, Expansion>;

struct PushforwardResult {
  std::vector<Word> classes;          // solved classes in order
  std::vector<Assignment> solutions;  // full assignments (known included)
  // Distinct candidate images per class.
  std::map<Word, std::vector<Expansion>> candidates() const;
  bool unique() const { return solutions.size() == 1; }
};

PushforwardResult solve_pushforward(const PushforwardProblem& p);

// tau^x cap (sum c_y tau_y) in the ambient space.
Expansion cap_product(const Schubert& s, const Word& x, const Expansion& e);
// h cap sigma_w (Chevalley, homology side).
Expansion hyperplane_cap(const Schubert& s, const Expansion& e);

}  // namespace jdt
