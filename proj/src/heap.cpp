// SPDX-License-Identifier: Apache-2.0

#include "jdt/heap.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace jdt {

Poset::Poset(std::vector<int> colors, const std::vector<Mask>& lower)
    : color_(std::move(colors)) {
  const int n = size();
  if (n > 64) throw Error("posets are limited to 64 elements");
  below_.assign(n, 0);
  above_.assign(n, 0);
  lcover_.assign(n, 0);
  ucover_.assign(n, 0);
  for (int p = 0; p < n; ++p) {
    Mask b = 0;
    for (Mask m = lower[p]; m; m &= m - 1) {
      int q = __builtin_ctzll(m);
      if (q >= p) throw Error("relations must follow the index order");
      b |= bit(q) | below_[q];
    }
    below_[p] = b;
  }
  for (int p = 0; p < n; ++p)
    for (Mask m = below_[p]; m; m &= m - 1) above_[__builtin_ctzll(m)] |= bit(p);
  for (int p = 0; p < n; ++p) {
    Mask inner = 0;
    for (Mask m = below_[p]; m; m &= m - 1) inner |= below_[__builtin_ctzll(m)];
    lcover_[p] = below_[p] & ~inner;
    for (Mask m = lcover_[p]; m; m &= m - 1) ucover_[__builtin_ctzll(m)] |= bit(p);
  }
}

bool Poset::is_ideal(Mask m) const {
  for (Mask r = m; r; r &= r - 1)
    if (below_[__builtin_ctzll(r)] & ~m) return false;
  return true;
}

Mask Poset::down_closure(Mask m) const {
  Mask out = m;
  for (Mask r = m; r; r &= r - 1) out |= below_[__builtin_ctzll(r)];
  return out;
}

Mask Poset::maximal(Mask m) const {
  Mask out = 0;
  for (Mask r = m; r; r &= r - 1) {
    int p = __builtin_ctzll(r);
    if (!(above_[p] & m)) out |= bit(p);
  }
  return out;
}

Mask Poset::minimal(Mask m) const {
  Mask out = 0;
  for (Mask r = m; r; r &= r - 1) {
    int p = __builtin_ctzll(r);
    if (!(below_[p] & m)) out |= bit(p);
  }
  return out;
}

std::vector<Mask> Poset::ideals() const {
  std::vector<Mask> out{0};
  std::vector<Mask> cur{0};
  for (int s = 0; s < size(); ++s) {
    std::set<Mask> next;
    for (Mask i : cur)
      for (int p = 0; p < size(); ++p)
        if (!((i >> p) & 1) && (below_[p] & ~i) == 0) next.insert(i | bit(p));
    cur.assign(next.begin(), next.end());
    out.insert(out.end(), cur.begin(), cur.end());
  }
  return out;
}

int Poset::element(int c, int k) const {
  int seen = 0;
  for (int p = 0; p < size(); ++p)
    if (color_[p] == c && ++seen == k) return p;
  return -1;
}

int Poset::color_count(int c, Mask m) const {
  int n = 0;
  for (Mask r = m; r; r &= r - 1)
    if (color_[__builtin_ctzll(r)] == c) ++n;
  return n;
}

Poset Poset::induced(Mask m, std::vector<int>* map) const {
  std::vector<int> old;
  std::vector<int> pos(size(), -1);
  for (Mask r = m; r; r &= r - 1) {
    int p = __builtin_ctzll(r);
    pos[p] = static_cast<int>(old.size());
    old.push_back(p);
  }
  std::vector<int> colors;
  std::vector<Mask> lower;
  for (int p : old) {
    colors.push_back(color_[p]);
    Mask l = 0;
    for (Mask r = below_[p] & m; r; r &= r - 1) l |= bit(pos[__builtin_ctzll(r)]);
    lower.push_back(l);
  }
  if (map) *map = old;
  return Poset(colors, lower);
}

IntVec Context::lambda() const {
  IntVec l(cartan.rank(), 0);
  l[marked] = 1;
  return l;
}

std::string Context::describe() const {
  std::string s = (cartan.tag.empty() ? std::string("G") : cartan.tag) + "/P" +
                  std::to_string(cartan.node(marked));
  return s + (mode == Mode::minuscule ? " (minuscule)" : " (cominuscule)");
}

Context make_context(const CartanData& c, int marked_node, Mode mode) {
  Context ctx;
  ctx.cartan = c;
  ctx.marked = c.index(marked_node);
  ctx.mode = mode;
  ctx.test = mode == Mode::minuscule ? c : c.transpose();
  return ctx;
}

bool is_lambda_minuscule(const CartanData& c, const Word& word,
                         const IntVec& lambda) {
  IntVec x = lambda;  // fundamental-weight coordinates
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (x.at(*it) != 1) return false;
    for (int j = 0; j < c.rank(); ++j) x[j] -= c.a[j][*it];
  }
  return true;
}

bool is_lambda_cominuscule(const CartanData& c, const Word& word,
                           const IntVec& lambda) {
  return is_lambda_minuscule(c.transpose(), word, lambda);
}

bool in_context(const Context& ctx, const Word& word) {
  return is_lambda_minuscule(ctx.test, word, ctx.lambda());
}

std::vector<std::vector<WeylElement>> context_elements(const Context& ctx,
                                                       int max_len) {
  // Breadth-first search on w(Lambda) for the test data, stepping only
  // along pairings equal to 1.
  const CartanData& t = ctx.test;
  std::vector<std::vector<WeylElement>> out;
  std::map<IntVec, WeylElement> cur;
  IntVec start = ctx.lambda();
  cur.emplace(start, identity(ctx.cartan));
  for (int l = 0; l <= max_len && !cur.empty(); ++l) {
    std::vector<WeylElement> lv;
    std::map<IntVec, WeylElement> next;
    for (auto& [x, w] : cur) {
      lv.push_back(w);
      if (l == max_len) continue;
      for (int i = 0; i < t.rank(); ++i) {
        if (x[i] != 1) continue;
        IntVec y = x;
        for (int j = 0; j < t.rank(); ++j) y[j] -= t.a[j][i];
        if (!next.count(y)) next.emplace(y, left_mult(ctx.cartan, i, w));
      }
    }
    std::sort(lv.begin(), lv.end());
    out.push_back(std::move(lv));
    cur = std::move(next);
  }
  return out;
}

namespace {

int braid_order(const CartanData& c, int i, int j) {
  long long p = static_cast<long long>(c.a[i][j]) * c.a[j][i];
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;  // infinite
  }
}

}  // namespace

Heap heap_of_word(const CartanData& c, const Word& word) {
  const int n = static_cast<int>(word.size());
  if (n > 64) throw Error("heaps are limited to 64 elements");
  std::vector<int> colors(n);
  for (int e = 0; e < n; ++e) colors[e] = word[n - 1 - e];
  std::vector<Mask> lower(n, 0);
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < e; ++f)
      if (colors[e] == colors[f] || c.a[colors[e]][colors[f]] != 0)
        lower[e] |= bit(f);
  return Heap{Poset(colors, lower), word};
}

bool is_fully_commutative(const CartanData& c, const Word& word) {
  if (!is_reduced(c, word)) return false;
  if (word.size() > 64) throw Error("heaps are limited to 64 elements");
  Heap h = heap_of_word(c, word);
  const Poset& p = h.poset;
  for (int i = 0; i < c.rank(); ++i)
    for (int j = i + 1; j < c.rank(); ++j) {
      int m = braid_order(c, i, j);
      if (m < 3) continue;
      std::vector<int> chain;
      for (int e = 0; e < p.size(); ++e)
        if (p.color(e) == i || p.color(e) == j) chain.push_back(e);
      for (size_t s = 0; s + m <= chain.size(); ++s) {
        bool alternating = true;
        for (int r = 1; r < m; ++r)
          if (p.color(chain[s + r]) == p.color(chain[s + r - 1]))
            alternating = false;
        if (!alternating) continue;
        int lo = chain[s], hi = chain[s + m - 1];
        if (popcount(p.above(lo) & p.below(hi)) == m - 2) return false;
      }
    }
  return true;
}

Heap build_heap(const CartanData& c, const Word& word) {
  WeylElement w = canonicalize(c, word);
  if (w.length() != static_cast<int>(word.size()))
    throw Error("word is not reduced");
  if (!is_fully_commutative(c, w.word))
    throw Error("element is not fully commutative");
  return heap_of_word(c, w.word);
}

bool root_lengths_ok(const Context& ctx, const Heap& h) {
  const Rational top = ctx.marked_length_sq();
  for (int col : h.poset.colors()) {
    Rational l = ctx.cartan.length_sq(col);
    if (ctx.mode == Mode::minuscule ? l < top : l > top) return false;
  }
  return true;
}

Heap context_heap(const Context& ctx, const Word& word) {
  if (!in_context(ctx, word)) throw Error("element is not in the context");
  Heap h = build_heap(ctx.cartan, word);
  if (!root_lengths_ok(ctx, h)) throw Error("heap color violates the root-length bound");
  return h;
}

Word ideal_word(const Heap& h, Mask ideal) {
  Word out;
  for (int e = h.size() - 1; e >= 0; --e)
    if ((ideal >> e) & 1) out.push_back(h.poset.color(e));
  return out;
}

WeylElement ideal_to_element(const CartanData& c, const Heap& h, Mask ideal) {
  return canonicalize(c, ideal_word(h, ideal));
}

bool element_to_ideal(const CartanData& c, const Heap& h,
                      const WeylElement& u, Mask* out) {
  // Peel u from the right: the next letter must be the color of an
  // addable element of the ideal built so far.
  IntVec kinv = inverse(c, u).k;
  Mask ideal = 0;
  for (int step = 0; step < u.length(); ++step) {
    IntVec p = rho_pairings(c, kinv);
    bool found = false;
    for (int e = 0; e < h.size() && !found; ++e) {
      if ((ideal >> e) & 1) continue;
      if (h.poset.below(e) & ~ideal) continue;
      int col = h.poset.color(e);
      if (p[col] < 0) {
        kinv[col] += p[col];
        ideal |= bit(e);
        found = true;
      }
    }
    if (!found) return false;
  }
  if (out) *out = ideal;
  return true;
}

WeylElement generated_element(const Context& ctx,
                              const std::vector<Generator>& gens,
                              int max_len) {
  std::vector<std::pair<int, int>> g;
  for (auto& x : gens) {
    if (x.k < 1) throw Error("generator index must be positive");
    g.emplace_back(ctx.cartan.index(x.node), x.k);
  }
  const CartanData& t = ctx.test;
  std::map<IntVec, WeylElement> cur;
  cur.emplace(ctx.lambda(), identity(ctx.cartan));
  for (int l = 0; l <= max_len && !cur.empty(); ++l) {
    std::vector<WeylElement> hits;
    std::map<IntVec, WeylElement> next;
    for (auto& [x, w] : cur) {
      Heap h = heap_of_word(ctx.cartan, w.word);
      bool ok = true;
      for (auto& [col, k] : g)
        if (h.poset.element(col, k) < 0) ok = false;
      if (ok) {
        Mask gen = 0;
        for (auto& [col, k] : g) gen |= bit(h.poset.element(col, k));
        if ((h.poset.maximal(h.poset.all()) & ~gen) != 0)
          throw Error("generated ideal has a maximal element outside the generators");
        hits.push_back(w);
      }
      for (int i = 0; i < t.rank(); ++i) {
        if (x[i] != 1) continue;
        IntVec y = x;
        for (int j = 0; j < t.rank(); ++j) y[j] -= t.a[j][i];
        if (!next.count(y)) next.emplace(y, left_mult(ctx.cartan, i, w));
      }
    }
    if (hits.size() > 1) throw Error("generators do not determine a unique ideal");
    if (hits.size() == 1) return hits[0];
    cur = std::move(next);
  }
  throw Error("no element generated by the given ideal generators");
}

std::vector<Generator> parse_generators(const std::string& text) {
  static const std::regex pair_re(
      R"((?:alpha_?|beta_?|a)?(\d+)\s*["']?\s*,\s*(\d+))");
  std::vector<Generator> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), pair_re);
       it != std::sregex_iterator(); ++it)
    out.push_back(Generator{std::stoi((*it)[1]), std::stoi((*it)[2])});
  if (out.empty() && text.find_first_not_of(" <>[]()") != std::string::npos)
    throw std::invalid_argument("cannot parse ideal generators: " + text);
  return out;
}

Mask peaks(const Heap& h) { return h.poset.maximal(h.poset.all()); }

std::vector<int> recursion_support(const CartanData& c, const Heap& h) {
  std::vector<bool> peak(c.rank(), false);
  for (Mask m = peaks(h); m; m &= m - 1)
    peak[h.poset.color(__builtin_ctzll(m))] = true;
  std::vector<int> out;
  for (int i = 0; i < c.rank(); ++i)
    if (!peak[i]) out.push_back(i);
  return out;
}

std::vector<int> recursion_support_by_weight(const Context& ctx,
                                             const Word& x) {
  const CartanData& t = ctx.test;
  IntVec lam = act_on_weight(t, x, ctx.lambda());
  std::vector<int> out;
  for (int i = 0; i < t.rank(); ++i) {
    long long p = ctx.lambda()[i];
    for (int j = 0; j < t.rank(); ++j) p -= lam[j] * t.a[i][j];
    if (p >= 0) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> slant_decompose(const CartanData& c,
                                              const Heap& h) {
  const Poset& p = h.poset;
  std::vector<int> present;
  for (int i = 0; i < c.rank(); ++i)
    if (p.element(i, 1) >= 0) present.push_back(i);
  auto root = [&](int col) { return p.element(col, 1); };
  // Adjacency among present colors, minus the cut edges.
  std::map<int, std::set<int>> adj;
  for (int i : present) adj[i];
  for (int i : present)
    for (int j : present)
      if (i != j && c.a[i][j] != 0) adj[i].insert(j);
  for (int i : present) {
    bool once = p.color_count(i, p.all()) == 1;
    bool maximal_in_tree = true;
    for (int j : present)
      if (j != i && p.less(root(i), root(j))) maximal_in_tree = false;
    if (!once || maximal_in_tree) continue;
    for (int j : present)
      if (c.a[i][j] != 0 && j != i && p.less(root(i), root(j))) {
        adj[i].erase(j);
        adj[j].erase(i);
      }
  }
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (int s : present) {
    if (seen.count(s)) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : adj[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

bool is_slant_finite_dimensional(const CartanData& c, const Heap& h) {
  for (auto& comp : slant_decompose(c, h))
    if (!is_finite_type(c, comp)) return false;
  return true;
}

bool heaps_isomorphic(const Poset& a, const Poset& b, std::vector<int>* iso) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  auto sig = [](const Poset& p, int e) {
    return std::make_pair(popcount(p.below(e)), popcount(p.above(e)));
  };
  std::vector<int> f(n, -1);
  Mask used = 0;
  std::function<bool(int)> go = [&](int e) {
    if (e == n) return true;
    for (int g = 0; g < n; ++g) {
      if ((used >> g) & 1) continue;
      if (sig(a, e) != sig(b, g)) continue;
      bool ok = true;
      for (int q = 0; q < e && ok; ++q) {
        if (a.less(q, e) != b.less(f[q], g)) ok = false;
        if (a.less(e, q) != b.less(g, f[q])) ok = false;
      }
      if (!ok) continue;
      f[e] = g;
      used |= bit(g);
      if (go(e + 1)) return true;
      used &= ~bit(g);
    }
    return false;
  };
  if (!go(0)) return false;
  if (iso) *iso = f;
  return true;
}

std::string heap_to_dot(const CartanData& c, const Heap& h,
                        const std::string& name) {
  const Poset& p = h.poset;
  Mask top = peaks(h);
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (int e = 0; e < p.size(); ++e) {
    int col = p.color(e);
    bool root = p.element(col, 1) == e;
    std::string shape = ((top >> e) & 1) ? "diamond" : "circle";
    std::string style = root ? "filled" : "solid";
    os << "  n" << e << " [label=\"" << c.labels[col] << "\", shape=" << shape
       << ", style=" << style << ", class=\"" << (root ? "tree" : "plain")
       << ((top >> e) & 1 ? " peak" : "") << "\"];\n";
  }
  for (int e = 0; e < p.size(); ++e)
    for (Mask m = p.lower_covers(e); m; m &= m - 1)
      os << "  n" << __builtin_ctzll(m) << " -> n" << e << ";\n";
  os << "}\n";
  return os.str();
}

bool PosetSystem::index_leq(const Entry& a, const Entry& b) {
  auto sub = [](const std::vector<int>& x, const std::vector<int>& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  return sub(a.s2, b.s2) && sub(b.s2, b.s1) && sub(b.s1, a.s1);
}

bool PosetSystem::embeds(const CartanData& c, const Entry& a,
                         const Entry& b) const {
  Mask m = 0;
  return element_to_ideal(c, b.heap, canonicalize(c, a.word), &m) &&
         popcount(m) == a.heap.size();
}

PosetSystem build_poset_system(const CartanData& c, const Word& p0,
                               const std::vector<Attachment>& attachments) {
  Heap base = build_heap(c, p0);
  const Poset& p = base.poset;
  PosetSystem sys;
  // S0: colors whose first occurrence is maximal in the rooted tree.
  std::vector<int> present;
  for (int i = 0; i < c.rank(); ++i)
    if (p.element(i, 1) >= 0) present.push_back(i);
  for (int i : present) {
    bool maximal = true;
    for (int j : present)
      if (j != i && p.less(p.element(i, 1), p.element(j, 1))) maximal = false;
    if (maximal) sys.s0.push_back(i);
  }
  std::map<int, Word> att;
  for (auto& a : attachments) {
    if (!std::count(sys.s0.begin(), sys.s0.end(), a.color))
      throw Error("attachment color is not maximal in the rooted tree");
    att[a.color] = a.word;
  }
  const int n0 = static_cast<int>(sys.s0.size());
  for (int m1 = 0; m1 < (1 << n0); ++m1)
    for (int m2 = m1;; m2 = (m2 - 1) & m1) {
      PosetSystem::Entry e;
      Mask keep = p.all();
      for (int b = 0; b < n0; ++b) {
        if (!((m1 >> b) & 1)) continue;
        e.s1.push_back(sys.s0[b]);
        int second = p.element(sys.s0[b], 2);
        if (second >= 0) keep &= ~(bit(second) | p.above(second));
      }
      bool skip = false;
      Word w;
      for (int b = 0; b < n0; ++b) {
        if (!((m2 >> b) & 1)) continue;
        e.s2.push_back(sys.s0[b]);
        auto it = att.find(sys.s0[b]);
        if (it == att.end()) skip = true;
        else w.insert(w.end(), it->second.begin(), it->second.end());
      }
      if (!skip) {
        Word low = ideal_word(base, keep);
        w.insert(w.end(), low.begin(), low.end());
        e.heap = build_heap(c, w);
        e.word = e.heap.word;
        sys.entries.push_back(std::move(e));
      }
      if (m2 == 0) break;
    }
  return sys;
}

}  // namespace jdt
