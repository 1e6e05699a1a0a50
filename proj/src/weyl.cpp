// SPDX-License-Identifier: Apache-2.0

#include "jdt/weyl.hpp"

#include <algorithm>

namespace jdt {

namespace {

long long rho_pairing(const CartanData& c, const IntVec& k, int i) {
  long long s = 1;
  for (int j = 0; j < c.rank(); ++j) s -= k[j] * c.a[i][j];
  return s;
}

void check_letter(const CartanData& c, int i) {
  if (i < 0 || i >= c.rank()) throw Error("letter out of range");
}

}  // namespace

IntVec rho_pairings(const CartanData& c, const IntVec& k) {
  IntVec p(c.rank());
  for (int i = 0; i < c.rank(); ++i) p[i] = rho_pairing(c, k, i);
  return p;
}

IntVec rho_vector(const CartanData& c, const Word& word) {
  IntVec k(c.rank(), 0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    check_letter(c, *it);
    k[*it] += rho_pairing(c, k, *it);
  }
  return k;
}

bool is_reduced(const CartanData& c, const Word& word) {
  IntVec k(c.rank(), 0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    check_letter(c, *it);
    long long p = rho_pairing(c, k, *it);
    if (p <= 0) return false;
    k[*it] += p;
  }
  return true;
}

WeylElement element_from_rho(const CartanData& c, const IntVec& k) {
  WeylElement w;
  w.k = k;
  IntVec cur = k;
  for (;;) {
    int pick = -1;
    long long p = 0;
    for (int i = 0; i < c.rank(); ++i) {
      p = rho_pairing(c, cur, i);
      if (p < 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) break;
    w.word.push_back(pick);
    cur[pick] += p;
  }
  return w;
}

WeylElement canonicalize(const CartanData& c, const Word& word) {
  return element_from_rho(c, rho_vector(c, word));
}

WeylElement identity(const CartanData& c) {
  return WeylElement{{}, IntVec(c.rank(), 0)};
}

WeylElement multiply(const CartanData& c, const WeylElement& x,
                     const WeylElement& y) {
  Word w = x.word;
  w.insert(w.end(), y.word.begin(), y.word.end());
  return canonicalize(c, w);
}

WeylElement inverse(const CartanData& c, const WeylElement& x) {
  return canonicalize(c, Word(x.word.rbegin(), x.word.rend()));
}

WeylElement left_mult(const CartanData& c, int i, const WeylElement& x) {
  check_letter(c, i);
  IntVec k = x.k;
  k[i] += rho_pairing(c, k, i);
  return element_from_rho(c, k);
}

std::vector<int> left_descents(const CartanData& c, const WeylElement& x) {
  std::vector<int> out;
  for (int i = 0; i < c.rank(); ++i)
    if (rho_pairing(c, x.k, i) < 0) out.push_back(i);
  return out;
}

std::vector<int> right_descents(const CartanData& c, const WeylElement& x) {
  return left_descents(c, inverse(c, x));
}

bool bruhat_leq(const CartanData& c, const WeylElement& u,
                const WeylElement& w) {
  // Lifting property: for a left descent s of w, u <= w iff
  // su <= sw when s is a descent of u, and u <= sw otherwise.
  IntVec ku = u.k, kw = w.k;
  int lu = u.length(), lw = w.length();
  for (;;) {
    if (lu > lw) return false;
    if (lu == 0) return true;
    int s = -1;
    long long pw = 0;
    for (int i = 0; i < c.rank(); ++i) {
      pw = rho_pairing(c, kw, i);
      if (pw < 0) {
        s = i;
        break;
      }
    }
    long long pu = rho_pairing(c, ku, s);
    if (pu < 0) {
      ku[s] += pu;
      --lu;
    }
    kw[s] += pw;
    --lw;
  }
}

WeylElement min_coset_rep(const CartanData& c, const WeylElement& w,
                          const std::vector<int>& marked) {
  std::vector<bool> is_marked(c.rank(), false);
  for (int m : marked) is_marked.at(m) = true;
  // Right descents of w are left descents of w^{-1}.
  IntVec k = inverse(c, w).k;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < c.rank(); ++i) {
      if (is_marked[i]) continue;
      long long p = rho_pairing(c, k, i);
      if (p < 0) {
        k[i] += p;
        changed = true;
      }
    }
  }
  return inverse(c, element_from_rho(c, k));
}

bool is_min_rep(const CartanData& c, const WeylElement& w,
                const std::vector<int>& marked) {
  IntVec k = inverse(c, w).k;
  for (int i = 0; i < c.rank(); ++i) {
    if (std::find(marked.begin(), marked.end(), i) != marked.end()) continue;
    if (rho_pairing(c, k, i) < 0) return false;
  }
  return true;
}

IntVec act_on_weight(const CartanData& c, const Word& word,
                     const IntVec& lambda) {
  IntVec lam(c.rank(), 0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    long long p = lambda[*it];
    for (int j = 0; j < c.rank(); ++j) p -= lam[j] * c.a[*it][j];
    lam[*it] += p;
  }
  return lam;
}

const Coset* Strata::find(const IntVec& lam) const {
  auto it = by_lam.find(lam);
  if (it == by_lam.end()) return nullptr;
  return &level[it->second.first][it->second.second];
}

const Coset* Strata::find_word(const Word& word) const {
  return find(act_on_weight(cartan, word, lambda));
}

std::vector<size_t> Strata::counts() const {
  std::vector<size_t> out;
  for (auto& l : level) out.push_back(l.size());
  return out;
}

Strata enumerate_min_reps(const CartanData& c, const IntVec& lambda,
                          int max_len) {
  if (static_cast<int>(lambda.size()) != c.rank())
    throw Error("weight has wrong length");
  for (long long x : lambda)
    if (x < 0) throw Error("weight is not dominant");
  if (max_len < 0) throw Error("max length must be nonnegative");
  Strata s;
  s.cartan = c;
  s.lambda = lambda;
  s.level.push_back({Coset{identity(c), IntVec(c.rank(), 0)}});
  auto lam_pairing = [&](const IntVec& lam, int i) {
    long long p = lambda[i];
    for (int j = 0; j < c.rank(); ++j) p -= lam[j] * c.a[i][j];
    return p;
  };
  for (int l = 0; l < max_len; ++l) {
    std::map<IntVec, Coset> next;
    for (const Coset& x : s.level[l]) {
      for (int i = 0; i < c.rank(); ++i) {
        long long p = lam_pairing(x.lam, i);
        if (p <= 0) continue;
        IntVec lam = x.lam;
        lam[i] += p;
        if (next.count(lam)) continue;
        next.emplace(lam, Coset{left_mult(c, i, x.w), lam});
      }
    }
    if (next.empty()) break;
    std::vector<Coset> lv;
    for (auto& entry : next) lv.push_back(std::move(entry.second));
    std::sort(lv.begin(), lv.end(), [](const Coset& a, const Coset& b) {
      return a.w.word < b.w.word;
    });
    s.level.push_back(std::move(lv));
  }
  bool top = true;
  for (const Coset& x : s.level.back())
    for (int i = 0; i < c.rank(); ++i)
      if (lam_pairing(x.lam, i) > 0) top = false;
  s.exhausted = top;
  for (int l = 0; l < static_cast<int>(s.level.size()); ++l)
    for (int p = 0; p < static_cast<int>(s.level[l].size()); ++p)
      s.by_lam[s.level[l][p].lam] = {l, p};
  return s;
}

}  // namespace jdt
