// SPDX-License-Identifier: Apache-2.0

#include "jdt/folding.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace jdt {

namespace {

bool find_theta(const CartanData& c, const std::vector<std::vector<int>>& orb,
                const std::vector<int>& orbit_of, std::vector<int>* theta) {
  const int n = c.rank();
  std::vector<int> t(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto& self, int i) -> bool {
    if (i == n) {
      // Each orbit must be a single cycle.
      for (auto& o : orb) {
        int x = o[0], len = 0;
        do {
          x = t[x];
          ++len;
        } while (x != o[0]);
        if (len != static_cast<int>(o.size())) return false;
      }
      return true;
    }
    for (int j : orb[orbit_of[i]]) {
      if (used[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        ok = c.a[i][k] == c.a[j][t[k]] && c.a[k][i] == c.a[t[k]][j];
      if (!ok) continue;
      t[i] = j;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    t[i] = -1;
    return false;
  };
  if (!rec(rec, 0)) return false;
  *theta = t;
  return true;
}

}  // namespace

Word FoldedPair::lift(const Word& folded_word) const {
  Word out;
  for (int m : folded_word)
    for (int j : orbit.at(m)) out.push_back(j);
  return out;
}

Word FoldedPair::apply_theta(const Word& ambient_word) const {
  Word out;
  for (int j : ambient_word) out.push_back(theta.at(j));
  return out;
}

FoldedPair fold(const CartanData& ambient,
                const std::vector<std::vector<int>>& orbits) {
  FoldedPair f;
  f.ambient = ambient;
  const int n = ambient.rank();
  f.orbit_of.assign(n, -1);
  for (size_t m = 0; m < orbits.size(); ++m) {
    if (orbits[m].empty()) throw Error("empty orbit");
    std::vector<int> idx;
    for (int id : orbits[m]) {
      int i = ambient.index(id);
      if (f.orbit_of[i] >= 0) throw Error("node in two orbits");
      f.orbit_of[i] = static_cast<int>(m);
      idx.push_back(i);
    }
    f.orbit.push_back(idx);
  }
  for (int i = 0; i < n; ++i)
    if (f.orbit_of[i] < 0) throw Error("orbits do not cover the diagram");
  for (auto& o : f.orbit)
    for (int i : o)
      for (int j : o)
        if (i != j && ambient.a[i][j] != 0) throw Error("orbit is not totally disconnected");
  if (!find_theta(ambient, f.orbit, f.orbit_of, &f.theta))
    throw Error("orbits do not come from a diagram automorphism");
  const int k = static_cast<int>(f.orbit.size());
  Matrix a(k, std::vector<int>(k, 0));
  for (int m = 0; m < k; ++m)
    for (int p = 0; p < k; ++p) {
      // Sum over the orbit of m against any member of the orbit of p.
      int val = 0;
      for (size_t q = 0; q < f.orbit[p].size(); ++q) {
        int s = 0;
        for (int j : f.orbit[m]) s += ambient.a[j][f.orbit[p][q]];
        if (q == 0) val = s;
        else if (s != val) throw Error("folded entry depends on the orbit member");
      }
      a[m][p] = val;
    }
  std::vector<int> nodes;
  std::vector<std::string> labels;
  for (int m = 0; m < k; ++m) {
    nodes.push_back(m + 1);
    std::string l = "{";
    for (size_t q = 0; q < f.orbit[m].size(); ++q)
      l += (q ? "," : "") + std::to_string(ambient.node(f.orbit[m][q]));
    labels.push_back(l + "}");
  }
  f.folded = make_cartan(nodes, a, "fold(" + ambient.tag + ")", labels);
  return f;
}

FoldingSpec make_folding_spec(const CartanData& ambient,
                              const std::vector<std::vector<int>>& orbits,
                              int marked_folded_node, int marked_ambient_node) {
  FoldingSpec s;
  s.pair = fold(ambient, orbits);
  s.marked_folded = s.pair.folded.index(marked_folded_node);
  s.marked_ambient = ambient.index(marked_ambient_node);
  if (s.pair.orbit_of[s.marked_ambient] != s.marked_folded)
    throw Error("marked ambient node is not in the marked orbit");
  return s;
}

FoldingSpec load_folding_spec(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad folding JSON: ") + e.what());
  }
  if (!j.contains("ambient") || !j.contains("orbits") || !j.contains("marked_folded"))
    throw Error("folding JSON needs ambient, orbits and marked_folded");
  CartanData amb = j["ambient"].is_string()
                       ? load_diagram(j["ambient"].get<std::string>())
                       : load_diagram_json(j["ambient"].dump());
  auto orbits = j["orbits"].get<std::vector<std::vector<int>>>();
  int mf = j["marked_folded"].get<int>();
  if (mf < 1 || mf > static_cast<int>(orbits.size()))
    throw Error("marked_folded is not an orbit index");
  int ma = j.contains("marked_ambient") ? j["marked_ambient"].get<int>()
                                        : orbits[mf - 1].at(0);
  return make_folding_spec(amb, orbits, mf, ma);
}

WeylElement unfold_minuscule(const FoldingSpec& f, const Word& w,
                             std::vector<int>* heap_iso) {
  const CartanData& fc = f.pair.folded;
  const CartanData& ac = f.pair.ambient;
  if (!is_reduced(fc, w)) throw Error("word is not reduced");
  IntVec lam(fc.rank(), 0);
  lam[f.marked_folded] = 1;
  if (!is_lambda_minuscule(fc, w, lam)) throw Error("element is not minuscule");
  WeylElement lifted = canonicalize(ac, f.pair.lift(w));
  WeylElement rep = min_coset_rep(ac, lifted, {f.marked_ambient});
  if (rep.length() != static_cast<int>(w.size()))
    throw Error("unfolded representative has the wrong length");
  Heap a = build_heap(fc, w), b = build_heap(ac, rep.word);
  if (!heaps_isomorphic(a.poset, b.poset, heap_iso))
    throw Error("unfolded heap is not isomorphic");
  return rep;
}

Expansion pushforward_minuscule(const FoldingSpec& f, const Word& w) {
  return {{unfold_minuscule(f, w).word, 1}};
}

Expansion pullback_minuscule(const FoldingSpec& f, const Word& w) {
  const CartanData& fc = f.pair.folded;
  const Word target = unfold_minuscule(f, w).word;
  IntVec lam(fc.rank(), 0);
  lam[f.marked_folded] = 1;
  const int l = static_cast<int>(w.size());
  Strata s = enumerate_min_reps(fc, lam, l);
  Expansion out;
  for (const Coset& co : s.level.at(l)) {
    if (!is_lambda_minuscule(fc, co.w.word, lam))
      throw Error("degree contains a class that is not minuscule");
    if (unfold_minuscule(f, co.w.word).word == target) out[co.w.word] += 1;
  }
  return out;
}

Expansion pushforward_extension(const FoldingSpec& f, const Word& w,
                                int beta_folded) {
  const CartanData& fc = f.pair.folded;
  const CartanData& ac = f.pair.ambient;
  WeylElement base = canonicalize(fc, w);
  WeylElement ext = left_mult(fc, beta_folded, base);
  if (ext.length() != base.length() + 1 || !is_min_rep(fc, ext, {f.marked_folded}))
    throw Error("extension is not a longer minimal representative");
  WeylElement u = unfold_minuscule(f, w);
  Expansion out;
  for (int j : f.pair.orbit.at(beta_folded)) {
    WeylElement x = left_mult(ac, j, u);
    if (x.length() != u.length() + 1 || !is_min_rep(ac, x, {f.marked_ambient}))
      throw Error("ambient extension is not a longer minimal representative");
    out[x.word] += 1;
  }
  return out;
}

Expansion hyperplane_cap(const Schubert& s, const Expansion& e) {
  Expansion out;
  for (auto& [w, c] : e) {
    if (c == 0) continue;
    auto [l, i] = s.locate(w);
    if (l == 0) continue;
    for (const Cover& cv : s.covers(l - 1))
      if (cv.to == i) out[s.at(l - 1, cv.from).w.word] += c * cv.coeff;
  }
  return out;
}

Expansion cap_product(const Schubert& s, const Word& x, const Expansion& e) {
  auto [lx, ix] = s.locate(x);
  const Word& xw = s.at(lx, ix).w.word;
  Expansion out;
  std::map<int, std::map<Word, Expansion>> prod;  // by level of z
  for (auto& [y, c] : e) {
    if (c == 0) continue;
    auto [ly, iy] = s.locate(y);
    const int lz = ly - lx;
    if (lz < 0) continue;
    auto& tab = prod[lz];
    if (tab.empty())
      for (const Coset& z : s.strata().level.at(lz))
        tab[z.w.word] = s.structure_constants(xw, z.w.word);
    for (auto& [z, sc] : tab) {
      auto it = sc.find(y);
      if (it != sc.end()) out[z] += c * it->second;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<Word, std::vector<Expansion>> PushforwardResult::candidates() const {
  std::map<Word, std::vector<Expansion>> out;
  for (const Word& w : classes) {
    std::set<Expansion> seen;
    for (const Assignment& a : solutions) seen.insert(a.at(w));
    out[w].assign(seen.begin(), seen.end());
  }
  return out;
}

namespace {

class Solver {
 public:
  explicit Solver(const PushforwardProblem& p)
      : p_(p), F_(*p.folded), E_(*p.ambient), pair_(*p.pair) {
    for (int j = 0; j < E_.cartan().rank(); ++j)
      if (E_.lambda()[j] != E_.lambda()[pair_.theta[j]])
        throw Error("automorphism does not preserve the ambient weight");
    if (p_.unknown.empty()) {
      for (int l = p_.lo; l <= std::min(p_.hi, F_.max_len()); ++l)
        for (const Coset& co : F_.strata().level[l])
          if (!p_.known.count(co.w.word)) classes_.push_back(co.w.word);
    } else {
      for (const Word& w : p_.unknown) {
        auto [l, i] = F_.locate(w);
        classes_.push_back(F_.at(l, i).w.word);
      }
      std::stable_sort(classes_.begin(), classes_.end(),
                       [](const Word& a, const Word& b) { return a.size() < b.size(); });
    }
    assign_ = p_.known;
    // Product constraints become checkable once all levels they touch are set.
    for (size_t k = 0; k < p_.products.size(); ++k) {
      auto [a, b] = p_.products[k];
      int la = E_.locate(a).first, lb = E_.locate(b).first;
      int ready = -1;
      for (int l : {la, lb, la + lb})
        for (size_t c = 0; c < classes_.size(); ++c)
          if (static_cast<int>(classes_[c].size()) == l) ready = std::max(ready, static_cast<int>(c));
      ready_[ready].push_back(k);
    }
  }

  PushforwardResult run() {
    PushforwardResult r;
    r.classes = classes_;
    if (products_hold(-1)) dfs(0, &r);
    return r;
  }

 private:
  Word theta_class(const Word& w) const {
    const Coset* co = E_.strata().find_word(pair_.apply_theta(w));
    if (!co) throw Error("automorphism image outside the enumerated range");
    return co->w.word;
  }

  bool invariant(const Expansion& e) const {
    for (auto& [w, c] : e) {
      if (c == 0) continue;
      auto it = e.find(theta_class(w));
      if (it == e.end() || it->second != c) return false;
    }
    return true;
  }

  const std::vector<std::vector<Word>>& orbits(int l) {
    auto it = orbits_.find(l);
    if (it != orbits_.end()) return it->second;
    std::vector<std::vector<Word>> out;
    std::set<Word> seen;
    for (const Coset& co : E_.strata().level.at(l)) {
      if (seen.count(co.w.word)) continue;
      std::vector<Word> o;
      Word x = co.w.word;
      while (!seen.count(x)) {
        seen.insert(x);
        o.push_back(x);
        x = theta_class(x);
      }
      out.push_back(o);
    }
    return orbits_[l] = out;
  }

  const Expansion& image(const Word& w) const {
    auto it = assign_.find(w);
    if (it == assign_.end()) throw Error("image of a lower class is not available");
    return it->second;
  }

  std::vector<Expansion> candidates_for(const Word& sigma) {
    const int l = static_cast<int>(sigma.size());
    if (l > E_.max_len()) throw Error("ambient range too short");
    const BigInt deg = F_.homology_degree(sigma);
    const auto& orb = orbits(l);
    const int n = static_cast<int>(orb.size());
    std::vector<BigInt> weight(n);
    std::vector<Expansion> capped(n);
    for (int o = 0; o < n; ++o) {
      Expansion e;
      for (const Word& w : orb[o]) {
        weight[o] += E_.homology_degree(w);
        e[w] = 1;
      }
      capped[o] = hyperplane_cap(E_, e);
    }
    Expansion target;
    const bool proj = p_.use_projection && l > 0;
    if (proj)
      for (auto& [v, c] : hyperplane_cap(F_, Expansion{{sigma, 1}}))
        for (auto& [x, d] : image(v)) target[x] += c * d;
    std::vector<Expansion> out;
    std::vector<BigInt> coef(n);
    Expansion partial;
    auto fits = [&](const Expansion& e) {
      for (auto& [x, c] : e) {
        auto it = target.find(x);
        if (c > (it == target.end() ? BigInt(0) : it->second)) return false;
      }
      return true;
    };
    auto rec = [&](auto& self, int o, const BigInt& rest) -> void {
      if (o == n) {
        if (rest != 0) return;
        if (proj) {
          Expansion lhs;
          for (auto& [x, c] : partial)
            if (c != 0) lhs[x] = c;
          Expansion t;
          for (auto& [x, c] : target)
            if (c != 0) t[x] = c;
          if (lhs != t) return;
        }
        Expansion img;
        for (int q = 0; q < n; ++q)
          if (coef[q] != 0)
            for (const Word& w : orb[q]) img[w] = coef[q];
        for (const CapFilter& cf : p_.cap_filters)
          if (cf.degree == l && !invariant(cap_product(E_, cf.ambient_class, img))) return;
        out.push_back(img);
        return;
      }
      if (weight[o] == 0) throw Error("class of degree zero");
      BigInt a = 0;
      for (;;) {
        coef[o] = a;
        self(self, o + 1, rest - a * weight[o]);
        if ((a + 1) * weight[o] > rest) break;
        ++a;
        if (proj) {
          for (auto& [x, c] : capped[o]) partial[x] += c;
          if (!fits(partial)) break;
        }
      }
      if (proj)
        for (auto& [x, c] : capped[o]) partial[x] -= c * a;
      coef[o] = 0;
    };
    rec(rec, 0, deg);
    return out;
  }

  Expansion pullback(const Word& x) const {
    auto [l, i] = E_.locate(x);
    Expansion out;
    for (const Coset& co : F_.strata().level.at(l)) {
      auto it = image(co.w.word).find(x);
      if (it != image(co.w.word).end() && it->second != 0) out[co.w.word] = it->second;
    }
    return out;
  }

  const Expansion& folded_product(const Word& a, const Word& b) {
    auto key = std::make_pair(a, b);
    auto it = fprod_.find(key);
    if (it != fprod_.end()) return it->second;
    return fprod_[key] = F_.structure_constants(a, b);
  }

  bool products_hold(int ready) {
    auto it = ready_.find(ready);
    if (it == ready_.end()) return true;
    for (size_t k : it->second) {
      const auto& [a, b] = p_.products[k];
      Expansion lhs, rhs;
      Expansion pa = pullback(a), pb = pullback(b);
      for (auto& [s1, c1] : pa)
        for (auto& [s2, c2] : pb)
          for (auto& [s, c] : folded_product(s1, s2)) lhs[s] += c1 * c2 * c;
      auto pk = std::make_pair(a, b);
      auto ai = eprod_.find(pk);
      if (ai == eprod_.end())
        ai = eprod_.emplace(pk, p_.ambient_product ? p_.ambient_product(a, b)
                                                   : E_.structure_constants(a, b)).first;
      for (auto& [x, c] : ai->second)
        for (auto& [s, d] : pullback(x)) rhs[s] += c * d;
      auto clean = [](Expansion& e) {
        for (auto i = e.begin(); i != e.end();) i = i->second == 0 ? e.erase(i) : std::next(i);
      };
      clean(lhs);
      clean(rhs);
      if (lhs != rhs) return false;
    }
    return true;
  }

  void dfs(size_t i, PushforwardResult* r) {
    if (r->solutions.size() >= p_.max_solutions) return;
    if (i == classes_.size()) {
      r->solutions.push_back(assign_);
      return;
    }
    for (Expansion& img : candidates_for(classes_[i])) {
      assign_[classes_[i]] = img;
      if (products_hold(static_cast<int>(i))) dfs(i + 1, r);
    }
    assign_.erase(classes_[i]);
  }

  const PushforwardProblem& p_;
  const Schubert& F_;
  const Schubert& E_;
  const FoldedPair& pair_;
  std::vector<Word> classes_;
  Assignment assign_;
  std::map<int, std::vector<size_t>> ready_;
  std::map<int, std::vector<std::vector<Word>>> orbits_;
  std::map<std::pair<Word, Word>, Expansion> fprod_, eprod_;
};

}  // namespace

PushforwardResult solve_pushforward(const PushforwardProblem& p) {
  if (!p.folded || !p.ambient || !p.pair) throw Error("incomplete push-forward problem");
  Solver s(p);
  return s.run();
}

}  // namespace jdt
