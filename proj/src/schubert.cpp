// SPDX-License-Identifier: Apache-2.0

#include "jdt/schubert.hpp"

#include <numeric>

namespace jdt {

namespace {

MixedWeight orbit_weight(const IntVec& lambda, const IntVec& lam) {
  MixedWeight x{lambda, lam};
  for (auto& r : x.r) r = -r;
  return x;
}

bool find_cover_root(const CartanData& c, const Coset& w, const Coset& v,
                     IntVec* root) {
  IntVec d(c.rank());
  long long g = 0;
  for (int i = 0; i < c.rank(); ++i) {
    d[i] = v.w.k[i] - w.w.k[i];
    if (d[i] < 0) return false;
    g = std::gcd(g, d[i]);
  }
  if (g == 0) return false;
  const MixedWeight wrho = orbit_weight(IntVec(c.rank(), 1), w.w.k);
  for (long long m = 1; m <= g; ++m) {
    if (g % m != 0) continue;
    IntVec gamma = d;
    for (auto& x : gamma) x /= m;
    if (!is_real_root(c, gamma)) continue;
    if (coroot_pairing(c, wrho, gamma) != Rational(m)) continue;
    *root = gamma;
    return true;
  }
  return false;
}

}  // namespace

Schubert::Schubert(CartanData c, IntVec lambda, int max_len)
    : c_(std::move(c)), s_(enumerate_min_reps(c_, lambda, max_len)) {
  const int top = s_.max_len();
  covers_.resize(top);
  for (int l = 0; l < top; ++l) {
    const auto& lo = s_.level[l];
    const auto& hi = s_.level[l + 1];
    for (int i = 0; i < static_cast<int>(lo.size()); ++i)
      for (int j = 0; j < static_cast<int>(hi.size()); ++j) {
        IntVec gamma;
        if (!find_cover_root(c_, lo[i], hi[j], &gamma)) continue;
        Rational k = coroot_pairing(c_, orbit_weight(s_.lambda, lo[i].lam), gamma);
        if (k.denominator() != 1 || k <= 0) throw Error("bad Chevalley multiplicity");
        covers_[l].push_back(Cover{i, j, gamma, k.numerator()});
      }
  }
  hom_.resize(top + 1);
  for (int l = 0; l <= top; ++l) hom_[l].assign(s_.level[l].size(), 0);
  hom_[0][0] = 1;
  for (int l = 0; l < top; ++l)
    for (auto& cv : covers_[l]) hom_[l + 1][cv.to] += hom_[l][cv.from] * cv.coeff;
  if (finite()) {
    cohom_.resize(top + 1);
    for (int l = 0; l <= top; ++l) cohom_[l].assign(s_.level[l].size(), 0);
    if (s_.level[top].size() != 1) throw Error("finite orbit without a unique top");
    cohom_[top][0] = 1;
    for (int l = top - 1; l >= 0; --l)
      for (auto& cv : covers_[l]) cohom_[l][cv.from] += cohom_[l + 1][cv.to] * cv.coeff;
  }
}

std::pair<int, int> Schubert::locate(const Word& w) const {
  const Coset* co = s_.find_word(w);
  if (!co) throw Error("element outside the enumerated range");
  auto it = s_.by_lam.find(co->lam);
  if (co->w.word != canonicalize(c_, w).word)
    throw Error("element is not a minimal coset representative");
  return it->second;
}

Expansion Schubert::chevalley_multiply(const Expansion& e, bool* truncated) const {
  Expansion out;
  bool trunc = false;
  for (auto& [w, coeff] : e) {
    auto [l, i] = locate(w);
    if (l == max_len()) {
      if (!finite()) trunc = true;
      continue;
    }
    for (auto& cv : covers_[l])
      if (cv.from == i) out[s_.level[l + 1][cv.to].w.word] += coeff * cv.coeff;
  }
  if (truncated) *truncated = trunc;
  return out;
}

BigInt Schubert::homology_degree(const Word& w) const {
  auto [l, i] = locate(w);
  return hom_[l][i];
}

BigInt Schubert::cohomology_degree(const Word& w) const {
  if (!finite()) throw Error("cohomology degree needs a finite orbit");
  auto [l, i] = locate(w);
  return cohom_[l][i];
}

Word Schubert::poincare_dual(const Word& u) const {
  if (!finite()) throw Error("Poincare duality needs a finite orbit");
  auto [l, i] = locate(u);
  // Longest element of W.
  IntVec k(c_.rank(), 0);
  for (bool grown = true; grown;) {
    grown = false;
    IntVec p = rho_pairings(c_, k);
    for (int j = 0; j < c_.rank(); ++j)
      if (p[j] > 0) {
        k[j] += p[j];
        grown = true;
        break;
      }
  }
  WeylElement w0 = element_from_rho(c_, k);
  MixedWeight x = orbit_weight(s_.lambda, s_.level[l][i].lam);
  for (auto it = w0.word.rbegin(); it != w0.word.rend(); ++it)
    x = reflect_weight(c_, *it, x);
  IntVec lam = x.r;
  for (auto& r : lam) r = -r;
  const Coset* co = s_.find(lam);
  if (!co) throw Error("Poincare dual not found");
  return co->w.word;
}

BigInt Schubert::self_product_degree(const Word& u) const {
  Word dual = poincare_dual(u);
  auto [l, i] = locate(u);
  int steps = max_len() - 2 * l;
  if (steps < 0) return 0;
  Expansion e{{s_.level[l][i].w.word, 1}};
  for (int s = 0; s < steps; ++s) e = chevalley_multiply(e);
  auto it = e.find(dual);
  return it == e.end() ? BigInt(0) : it->second;
}

std::map<Word, Poly> billey_restrictions(const CartanData& c, const WeylElement& w) {
  const Word& a = w.word;
  std::vector<Poly> beta;
  for (size_t j = 0; j < a.size(); ++j) {
    IntVec r(c.rank(), 0);
    r[a[j]] = 1;
    for (size_t m = j; m-- > 0;) r = reflect_root(c, a[m], r);
    for (long long x : r)
      if (x < 0) throw Error("word is not reduced");
    beta.push_back(Poly::linear(r));
  }
  // State: k-vector of the inverse of the product chosen so far.
  std::map<IntVec, Poly> states{{IntVec(c.rank(), 0), Poly::constant(1)}};
  for (size_t j = 0; j < a.size(); ++j) {
    std::map<IntVec, Poly> next = states;
    for (auto& [kinv, p] : states) {
      long long q = rho_pairings(c, kinv)[a[j]];
      if (q <= 0) continue;
      IntVec k2 = kinv;
      k2[a[j]] += q;
      next[k2] += p * beta[j];
    }
    states = std::move(next);
  }
  std::map<Word, Poly> out;
  for (auto& [kinv, p] : states)
    if (!p.is_zero()) out[inverse(c, element_from_rho(c, kinv)).word] = p;
  return out;
}

const std::map<Word, Poly>& Schubert::restrictions_at(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(w);
    if (it != table_.end()) return *it->second;
  }
  std::vector<int> marked;
  for (int i = 0; i < c_.rank(); ++i)
    if (s_.lambda[i] != 0) marked.push_back(i);
  auto all = billey_restrictions(c_, canonicalize(c_, w));
  auto filtered = std::make_unique<std::map<Word, Poly>>();
  for (auto& [y, p] : all)
    if (is_min_rep(c_, canonicalize(c_, y), marked)) filtered->emplace(y, p);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = table_.find(w);
  if (it == table_.end()) it = table_.emplace(w, std::move(filtered)).first;
  return *it->second;
}

Poly Schubert::restriction(const Word& u, const Word& w) const {
  const auto& r = restrictions_at(canonicalize(c_, w).word);
  auto it = r.find(canonicalize(c_, u).word);
  return it == r.end() ? Poly() : it->second;
}

std::map<Word, Poly> Schubert::equivariant_product(const Word& u,
                                                   const Word& v) const {
  auto [lu, iu] = locate(u);
  auto [lv, iv] = locate(v);
  const Word& uw = s_.level[lu][iu].w.word;
  const Word& vw = s_.level[lv][iv].w.word;
  std::map<Word, Poly> out;
  const int hi = std::min(lu + lv, max_len());
  for (int l = std::max(lu, lv); l <= hi; ++l)
    for (const Coset& x : s_.level[l]) {
      const auto& r = restrictions_at(x.w.word);
      auto ru = r.find(uw), rv = r.find(vw);
      if (ru == r.end() || rv == r.end()) continue;
      Poly num = ru->second * rv->second;
      for (auto& [y, cy] : out) {
        auto ry = r.find(y);
        if (ry != r.end()) num -= cy * ry->second;
      }
      if (num.is_zero()) continue;
      out[x.w.word] = num.divide_exact(r.at(x.w.word));
    }
  return out;
}

Expansion Schubert::structure_constants(const Word& u, const Word& v,
                                        bool* truncated) const {
  auto [lu, iu] = locate(u);
  auto [lv, iv] = locate(v);
  if (truncated) *truncated = lu + lv > max_len();
  Expansion out;
  for (auto& [x, p] : equivariant_product(u, v)) {
    if (static_cast<int>(x.size()) != lu + lv) continue;
    if (p.degree() > 0) throw Error("structure constant is not a number");
    out[x] = p.constant_term();
  }
  return out;
}

BigInt Schubert::structure_constant(const Word& u, const Word& v,
                                    const Word& w) const {
  auto e = structure_constants(u, v);
  auto it = e.find(canonicalize(c_, w).word);
  return it == e.end() ? BigInt(0) : it->second;
}

std::vector<std::string> Schubert::variable_names() const {
  std::vector<std::string> out;
  for (int id : c_.nodes) out.push_back("a" + std::to_string(id));
  return out;
}

}  // namespace jdt
