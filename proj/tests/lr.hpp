// SPDX-License-Identifier: Apache-2.0
//
// Brute-force Littlewood-Richardson counts and the G(2,n) comparison
// shared by the unit tests and the acceptance binary.

#pragma once

#include "jdt/schubert.hpp"
#include "jdt/taquin.hpp"

#include <functional>

namespace jdt::testing {

using Partition = std::vector<int>;  // weakly decreasing, length <= rows

// Semistandard fillings of nu/lambda with content mu whose reverse
// reading word is a lattice word.
inline long long lr_count(const Partition& lam, const Partition& mu, const Partition& nu) {
  const int rows = static_cast<int>(nu.size());
  std::vector<std::pair<int, int>> cells;  // reading order: rows top down, right to left
  for (int i = 0; i < rows; ++i)
    for (int j = nu[i] - 1; j >= lam[i]; --j) cells.push_back({i, j});
  int total = 0;
  for (int x : mu) total += x;
  if (static_cast<int>(cells.size()) != total) return 0;
  std::vector<std::vector<int>> t(rows, std::vector<int>(nu.empty() ? 0 : nu[0] + 1, 0));
  std::vector<int> used(mu.size() + 1, 0);
  long long count = 0;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [i, j] = cells[k];
    for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
      if (used[v] >= mu[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice condition
      if (j + 1 < nu[i] && t[i][j + 1] < v) continue;     // rows weakly increase
      if (i > 0 && j >= lam[i - 1] && t[i - 1][j] >= v) continue;  // columns strictly increase
      t[i][j] = v;
      ++used[v];
      rec(k + 1);
      --used[v];
      t[i][j] = 0;
    }
  };
  rec(0);
  return count;
}

// Partition of an ideal of the 2 x (n-2) heap of A_{n-1}/P_2. Box (i, j)
// carries the color 2 + j - i (1-based nodes).
inline Partition partition_of(const Heap& h, Mask m) {
  Partition p{0, 0};
  for (int e = 0; e < h.size(); ++e) {
    if (!((m >> e) & 1)) continue;
    int node = h.poset.color(e) + 1;
    int k = h.poset.color_count(h.poset.color(e), h.poset.down_closure(bit(e)));
    int i = std::max(1, 2 - node + 1) + k - 1;
    ++p[i - 1];
  }
  return p;
}

struct GrassmannianReport {
  long long triples = 0, nonzero = 0, mismatches = 0;
};

// Every triple of ideals of the top heap of A_{n-1}/P_2.
inline GrassmannianReport compare_grassmannian(int n) {
  CartanData c = load_diagram("A" + std::to_string(n - 1));
  Context ctx = make_context(c, 2, Mode::minuscule);
  Schubert g(c, ctx.lambda(), 64);
  auto els = context_elements(ctx, 64);
  Heap h = context_heap(ctx, els.back().front().word);
  const Poset& p = h.poset;
  auto ideals = p.ideals();
  GrassmannianReport r;
  for (Mask nu : ideals)
    for (Mask lam : ideals)
      for (Mask mu : ideals) {
        if (popcount(lam) + popcount(mu) != popcount(nu)) continue;
        ++r.triples;
        bool inside = (lam & ~nu) == 0;
        long long lr = inside ? lr_count(partition_of(h, lam), partition_of(h, mu), partition_of(h, nu)) : 0;
        Rational tm = inside ? m_coeff(ctx, p, lam, mu, nu) * t_coeff(p, lam, mu, nu) : Rational(0);
        BigInt oracle = g.structure_constant(ideal_to_element(c, h, lam).word,
                                             ideal_to_element(c, h, mu).word,
                                             ideal_to_element(c, h, nu).word);
        if (tm != Rational(lr) || oracle != lr) ++r.mismatches;
        if (lr) ++r.nonzero;
      }
  return r;
}

}  // namespace jdt::testing
