// SPDX-License-Identifier: Apache-2.0

#include "jdt/taquin.hpp"

#include <algorithm>

namespace jdt {

bool is_standard(const Poset& p, const Tableau& t) {
  if (!p.is_ideal(t.outer) || !p.is_ideal(t.inner)) return false;
  if ((t.inner & ~t.outer) != 0) return false;
  if (static_cast<int>(t.pos.size()) != popcount(t.labeled())) return false;
  Mask seen = 0;
  for (int e : t.pos) {
    if (!((t.labeled() >> e) & 1) || ((seen >> e) & 1)) return false;
    if (p.below(e) & t.labeled() & ~seen) return false;
    seen |= bit(e);
  }
  return true;
}

Mask slide_candidates(const Poset& p, const Tableau& t) {
  Mask lab = t.labeled();
  Mask under = 0;
  for (Mask r = t.inner; r; r &= r - 1) {
    int e = __builtin_ctzll(r);
    if (p.above(e) & lab) under |= bit(e);
  }
  return p.maximal(under);
}

Tableau slide(const Poset& p, const Tableau& t, int x) {
  if (x < 0 || !((slide_candidates(p, t) >> x) & 1))
    throw Error("slide position is not admissible");
  std::vector<int> label_at(p.size(), -1);
  for (size_t k = 0; k < t.pos.size(); ++k) label_at[t.pos[k]] = static_cast<int>(k);
  Tableau r = t;
  int vacancy = x;
  for (;;) {
    int best = -1;
    for (Mask m = p.upper_covers(vacancy) & t.labeled(); m; m &= m - 1) {
      int y = __builtin_ctzll(m);
      if (label_at[y] >= 0 && (best < 0 || label_at[y] < label_at[best])) best = y;
    }
    if (best < 0) break;
    int k = label_at[best];
    r.pos[k] = vacancy;
    label_at[vacancy] = k;
    label_at[best] = -1;
    vacancy = best;
  }
  r.inner &= ~bit(x);
  r.outer &= ~bit(vacancy);
  return r;
}

Tableau rectify(const Poset& p, Tableau t, std::mt19937_64* rng) {
  for (;;) {
    Mask c = slide_candidates(p, t);
    if (!c) break;
    int x;
    if (rng) {
      int n = popcount(c);
      int pick = static_cast<int>((*rng)() % static_cast<unsigned>(n));
      Mask m = c;
      for (int i = 0; i < pick; ++i) m &= m - 1;
      x = __builtin_ctzll(m);
    } else {
      x = 63 - __builtin_clzll(c);
    }
    t = slide(p, t, x);
  }
  // Inner elements left over lie below no label; drop them.
  t.outer = t.labeled();
  t.inner = 0;
  return t;
}

Tableau canonical_tableau(const Poset& p, Mask mu) {
  Tableau t{0, mu, {}};
  for (int e = 0; e < p.size(); ++e)
    if ((mu >> e) & 1) t.pos.push_back(e);
  return t;
}

bool is_canonical(const Tableau& t) {
  return std::is_sorted(t.pos.begin(), t.pos.end());
}

std::map<Mask, long long> rectification_counts(const Poset& p, Mask lambda,
                                               Mask nu) {
  std::map<Mask, long long> out;
  if ((lambda & ~nu) != 0) return out;
  for_each_tableau(p, lambda, nu, [&](const Tableau& t) {
    Tableau r = rectify(p, t);
    if (is_canonical(r)) ++out[r.outer];
  });
  return out;
}

long long t_coeff(const Poset& p, Mask lambda, Mask mu, Mask nu) {
  if (popcount(nu) != popcount(lambda) + popcount(mu)) return 0;
  auto counts = rectification_counts(p, lambda, nu);
  auto it = counts.find(mu);
  return it == counts.end() ? 0 : it->second;
}

Rational m_value(const Context& ctx, const Poset& p, Mask u) {
  if (ctx.mode == Mode::minuscule) return 1;
  Rational m = 1;
  const Rational top = ctx.marked_length_sq();
  for (Mask r = u; r; r &= r - 1)
    m *= top / ctx.cartan.length_sq(p.color(__builtin_ctzll(r)));
  return m;
}

Rational m_coeff(const Context& ctx, const Poset& p, Mask u, Mask v, Mask w) {
  return m_value(ctx, p, w) / (m_value(ctx, p, u) * m_value(ctx, p, v));
}

Rational m_chevalley(const Context& ctx, int i) {
  Rational r = ctx.marked_length_sq() / ctx.cartan.length_sq(i);
  return r > 1 ? r : Rational(1);
}

std::vector<ProductTerm> taquin_product(const Context& ctx, const Heap& ambient,
                                        Mask lambda, Mask mu) {
  const Poset& p = ambient.poset;
  if (!p.is_ideal(lambda) || !p.is_ideal(mu)) throw Error("not an ideal");
  const int target = popcount(lambda) + popcount(mu);
  std::vector<ProductTerm> out;
  for (Mask nu : p.ideals()) {
    if (popcount(nu) != target || (lambda & ~nu)) continue;
    long long t = t_coeff(p, lambda, mu, nu);
    if (t == 0) continue;
    Rational m = m_coeff(ctx, p, lambda, mu, nu);
    Rational c = m * t;
    if (c.denominator() != 1) throw Error("t*m is not an integer");
    out.push_back(ProductTerm{nu, ideal_to_element(ctx.cartan, ambient, nu), t, m,
                              c.numerator()});
  }
  std::sort(out.begin(), out.end(), [](const ProductTerm& a, const ProductTerm& b) {
    return a.w.word < b.w.word;
  });
  return out;
}

RecursionCheck verify_taquin_recursion(const Context& ctx, const Heap& hw,
                                       Mask x, Mask u, Mask v) {
  const Poset& p = hw.poset;
  RecursionCheck rc;
  const Mask w = p.all();
  if (!p.is_ideal(x) || !p.is_ideal(u) || !p.is_ideal(v)) return rc;
  if ((x & ~u) != 0) return rc;
  if (popcount(v) + popcount(u) != popcount(w)) return rc;
  // Colors above x must avoid the peak colors of x.
  std::vector<bool> peak(ctx.cartan.rank(), false);
  for (Mask m = p.maximal(x); m; m &= m - 1) peak[p.color(__builtin_ctzll(m))] = true;
  for (Mask m = w & ~x; m; m &= m - 1)
    if (peak[p.color(__builtin_ctzll(m))]) return rc;
  rc.admissible = true;
  rc.lhs = m_coeff(ctx, p, u, v, w) * t_coeff(p, u, v, w);
  std::vector<int> map;
  Poset q = p.induced(w & ~x, &map);
  auto to_q = [&](Mask m) {
    Mask r = 0;
    for (size_t i = 0; i < map.size(); ++i)
      if ((m >> map[i]) & 1) r |= bit(static_cast<int>(i));
    return r;
  };
  auto from_q = [&](Mask m) {
    Mask r = 0;
    for (size_t i = 0; i < map.size(); ++i)
      if ((m >> i) & 1) r |= bit(map[i]);
    return r;
  };
  const Mask uq = to_q(u), qall = q.all();
  auto counts = rectification_counts(q, uq, qall);
  for (auto& [j, t1] : counts) {
    Mask sx = x | from_q(j);
    long long t2 = t_coeff(p, x, v, sx);
    if (t2 == 0) continue;
    rc.rhs += m_coeff(ctx, q, uq, j, qall) * t1 * m_coeff(ctx, p, x, v, sx) * t2;
  }
  return rc;
}

}  // namespace jdt
