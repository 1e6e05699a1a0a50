// SPDX-License-Identifier: Apache-2.0
//
// Colored posets, heaps of fully commutative elements, (co)minuscule
// contexts, order ideals, peaks, slant decomposition and poset systems.
//
// Heap elements are indexed bottom-up: element 0 is the last letter of
// the canonical word, so the index order is a linear extension and a
// set of elements is a bit mask (at most 64 elements).

#pragma once

#include "jdt/weyl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jdt {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask(1) << i; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask(0) : bit(n) - 1; }

class Poset {
 public:
  Poset() = default;
  // Builds the transitive closure of the given strict relations
  // (lower[p] = elements directly below p, all with smaller index).
  Poset(std::vector<int> colors, const std::vector<Mask>& lower);

  int size() const { return static_cast<int>(color_.size()); }
  int color(int p) const { return color_[p]; }
  const std::vector<int>& colors() const { return color_; }
  Mask below(int p) const { return below_[p]; }  // strict
  Mask above(int p) const { return above_[p]; }  // strict
  Mask lower_covers(int p) const { return lcover_[p]; }
  Mask upper_covers(int p) const { return ucover_[p]; }
  bool less(int p, int q) const { return (below_[q] >> p) & 1; }
  Mask all() const { return full_mask(size()); }

  bool is_ideal(Mask m) const;
  Mask down_closure(Mask m) const;
  Mask maximal(Mask m) const;
  Mask minimal(Mask m) const;
  std::vector<Mask> ideals() const;  // sorted by size, then value
  // (alpha, k): the k-th lowest element of the given color, or -1.
  int element(int color, int k) const;
  int color_count(int color, Mask m) const;
  // Induced subposet; map[i] is the old index of new element i.
  Poset induced(Mask m, std::vector<int>* map = nullptr) const;

 private:
  std::vector<int> color_;
  std::vector<Mask> below_, above_, lcover_, ucover_;
};

enum class Mode { minuscule, cominuscule };

// A marked diagram with a fundamental weight and a mode.  Weyl elements
// are always expressed over the real root data `cartan`; the
// (co)minuscule condition is tested on `test` (the transpose in the
// cominuscule case).
struct Context {
  CartanData cartan;
  CartanData test;
  int marked = 0;  // internal index
  Mode mode = Mode::minuscule;

  IntVec lambda() const;
  Rational marked_length_sq() const { return cartan.length_sq(marked); }
  std::string describe() const;
};

Context make_context(const CartanData& c, int marked_node, Mode mode);

bool is_lambda_minuscule(const CartanData& c, const Word& word,
                         const IntVec& lambda);
bool is_lambda_cominuscule(const CartanData& c, const Word& word,
                           const IntVec& lambda);
bool in_context(const Context& ctx, const Word& word);

// (Co)minuscule elements of the context up to max_len, by length.
std::vector<std::vector<WeylElement>> context_elements(const Context& ctx,
                                                       int max_len);

bool is_fully_commutative(const CartanData& c, const Word& word);

struct Heap {
  Poset poset;
  Word word;  // canonical word of the element
  int size() const { return poset.size(); }
};

// Heap of the element with the given (reduced, fully commutative) word;
// the canonical word is used for the indexing.
Heap build_heap(const CartanData& c, const Word& word);
// Heap of exactly this reduced word (indexing follows the word).
Heap heap_of_word(const CartanData& c, const Word& word);
// Colors of a minuscule heap are never shorter than the marked root, and
// never longer for a cominuscule heap.
bool root_lengths_ok(const Context& ctx, const Heap& h);
// Heap of an element of the context; both conditions are asserted.
Heap context_heap(const Context& ctx, const Word& word);

// Word of the element attached to an ideal (a right factor of w).
Word ideal_word(const Heap& h, Mask ideal);
WeylElement ideal_to_element(const CartanData& c, const Heap& h, Mask ideal);
// Ideal of h whose element is u, or nullopt-like -1 mask if u is not below.
bool element_to_ideal(const CartanData& c, const Heap& h,
                      const WeylElement& u, Mask* out);

// Generators (node id, k); returns the smallest element of the context
// whose heap contains all (alpha, k) and is generated by them.
struct Generator {
  int node;
  int k;
};
WeylElement generated_element(const Context& ctx,
                              const std::vector<Generator>& gens,
                              int max_len = 64);
std::vector<Generator> parse_generators(const std::string& text);

Mask peaks(const Heap& h);
// Nodes minus the colors of the peaks (internal indices).
std::vector<int> recursion_support(const CartanData& c, const Heap& h);
// {i : <x(Lambda), alpha_i^vee> >= 0} on the test data.
std::vector<int> recursion_support_by_weight(const Context& ctx,
                                             const Word& x);

// Color sets (internal indices) of the slant-irreducible components.
std::vector<std::vector<int>> slant_decompose(const CartanData& c,
                                              const Heap& h);
bool is_slant_finite_dimensional(const CartanData& c, const Heap& h);

// Heaps are isomorphic as colored posets up to a color bijection.
bool heaps_isomorphic(const Poset& a, const Poset& b,
                      std::vector<int>* iso = nullptr);

std::string heap_to_dot(const CartanData& c, const Heap& h,
                        const std::string& name);

// A system of posets built from one base heap P0 and attachments P_alpha
// at maximal colors of its rooted tree.  Index (S1, S2): S1 lists the
// colors that are cut down to a single occurrence, S2 the colors where
// P_alpha is attached (S2 contained in S1).
struct PosetSystem {
  struct Entry {
    std::vector<int> s1, s2;  // internal indices, sorted
    Word word;                // canonical word of the member element
    Heap heap;
  };
  std::vector<int> s0;
  std::vector<Entry> entries;
  // (S1,S2) <= (T1,T2) iff S2 c T2 c T1 c S1.
  static bool index_leq(const Entry& a, const Entry& b);
  // The member heaps of a <= b embed as ideals.
  bool embeds(const CartanData& c, const Entry& a, const Entry& b) const;
};

struct Attachment {
  int color;  // internal index of alpha in S0
  Word word;  // word of P_alpha over the full diagram
};

PosetSystem build_poset_system(const CartanData& c, const Word& p0,
                               const std::vector<Attachment>& attachments);

}  // namespace jdt
