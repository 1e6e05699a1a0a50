// SPDX-License-Identifier: Apache-2.0

#include "jdt/cartan.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <regex>

namespace jdt {

int CartanData::index(int id) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
  if (it == nodes.end() || *it != id)
    throw Error("unknown node " + std::to_string(id));
  return static_cast<int>(it - nodes.begin());
}

CartanData CartanData::transpose() const {
  CartanData t = *this;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) t.a[i][j] = a[j][i];
  t.d = symmetrizer(t.a);
  t.tag = tag.empty() ? "" : tag + "^T";
  return t;
}

CartanData CartanData::restrict(const std::vector<int>& idx) const {
  std::vector<int> ns;
  std::vector<std::string> ls;
  Matrix m(idx.size(), std::vector<int>(idx.size()));
  for (size_t p = 0; p < idx.size(); ++p) {
    ns.push_back(nodes.at(idx[p]));
    ls.push_back(labels.at(idx[p]));
    for (size_t q = 0; q < idx.size(); ++q) m[p][q] = a[idx[p]][idx[q]];
  }
  return make_cartan(ns, m, "", ls);
}

std::vector<Rational> symmetrizer(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> d(n, Rational(0));
  std::vector<int> comp(n, -1);
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = s;
    d[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0) continue;
        Rational dj = d[i] * Rational(a[i][j], a[j][i]);
        if (comp[j] < 0) {
          comp[j] = s;
          d[j] = dj;
          members.push_back(j);
          q.push(j);
        } else if (d[j] != dj) {
          throw Error("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rational lo = d[s];
    for (int j : members) lo = std::min(lo, d[j]);
    for (int j : members) d[j] /= lo;
  }
  return d;
}

CartanData make_cartan(std::vector<int> nodes, Matrix a, std::string tag,
                       std::vector<std::string> labels) {
  const size_t n = nodes.size();
  if (a.size() != n) throw Error("matrix size does not match node list");
  for (size_t i = 1; i < n; ++i)
    if (nodes[i] <= nodes[i - 1]) throw Error("node ids must increase");
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error("matrix is not square");
    if (a[i][i] != 2) throw Error("diagonal entries must be 2");
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw Error("positive off-diagonal entry");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw Error("a[i][j] = 0 must imply a[j][i] = 0");
    }
  }
  CartanData c;
  c.d = symmetrizer(a);
  c.nodes = std::move(nodes);
  c.a = std::move(a);
  c.tag = std::move(tag);
  if (labels.empty())
    for (int id : c.nodes) labels.push_back("alpha_" + std::to_string(id));
  c.labels = std::move(labels);
  return c;
}

namespace {

struct Builder {
  std::vector<int> ids;
  Matrix a;
  explicit Builder(std::vector<int> nodes) : ids(std::move(nodes)) {
    a.assign(ids.size(), std::vector<int>(ids.size(), 0));
    for (size_t i = 0; i < ids.size(); ++i) a[i][i] = 2;
  }
  int at(int id) const {
    return static_cast<int>(std::find(ids.begin(), ids.end(), id) - ids.begin());
  }
  // a[i][j] = <alpha_j, alpha_i^vee> = -mij, a[j][i] = -mji.
  void bond(int i, int j, int mij = 1, int mji = 1) {
    a[at(i)][at(j)] = -mij;
    a[at(j)][at(i)] = -mji;
  }
};

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

Builder chain(int n) {
  Builder b(range(1, n));
  for (int i = 1; i < n; ++i) b.bond(i, i + 1);
  return b;
}

Builder e_type(int n) {
  Builder b(range(1, n));
  b.bond(1, 3);
  b.bond(2, 4);
  for (int i = 3; i < n; ++i) b.bond(i, i + 1);
  return b;
}

}  // namespace

CartanData load_diagram(const std::string& tag) {
  static const std::regex classical("([ABCDEFG])([0-9]+)");
  std::smatch m;
  if (tag == "affine-E7-1") {
    Builder b(range(0, 7));
    b.bond(0, 1);
    b.bond(1, 3);
    b.bond(2, 4);
    for (int i = 3; i < 7; ++i) b.bond(i, i + 1);
    return make_cartan(b.ids, b.a, tag);
  }
  if (tag == "tw-affine-F4-2") {
    Builder b(range(1, 5));
    b.bond(1, 2);
    b.bond(2, 3, 1, 2);
    b.bond(3, 4);
    b.bond(4, 5);
    return make_cartan(b.ids, b.a, tag);
  }
  if (!std::regex_match(tag, m, classical)) throw Error("unknown diagram " + tag);
  const char t = m[1].str()[0];
  const int n = std::stoi(m[2].str());
  Builder b({});
  switch (t) {
    case 'A':
      if (n < 1) break;
      b = chain(n);
      return make_cartan(b.ids, b.a, tag);
    case 'B':
      if (n < 2) break;
      b = chain(n);
      b.bond(n - 1, n, 1, 2);
      return make_cartan(b.ids, b.a, tag);
    case 'C':
      if (n < 2) break;
      b = chain(n);
      b.bond(n - 1, n, 2, 1);
      return make_cartan(b.ids, b.a, tag);
    case 'D':
      if (n < 4) break;
      b = Builder(range(1, n));
      for (int i = 1; i < n - 1; ++i) b.bond(i, i + 1);
      b.bond(n - 2, n);
      return make_cartan(b.ids, b.a, tag);
    case 'E':
      if (n < 6 || n > 8) break;
      b = e_type(n);
      return make_cartan(b.ids, b.a, tag);
    case 'F':
      if (n != 4) break;
      b = chain(4);
      b.bond(2, 3, 1, 2);
      return make_cartan(b.ids, b.a, tag);
    case 'G':
      if (n != 2) break;
      b = chain(2);
      b.bond(1, 2, 3, 1);
      return make_cartan(b.ids, b.a, tag);
  }
  throw Error("unknown diagram " + tag);
}

CartanData load_diagram_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad diagram JSON: ") + e.what());
  }
  if (!j.contains("a")) throw Error("diagram JSON needs \"a\"");
  Matrix a = j["a"].get<Matrix>();
  std::vector<int> nodes;
  if (j.contains("nodes"))
    nodes = j["nodes"].get<std::vector<int>>();
  else
    nodes = range(1, static_cast<int>(a.size()));
  // Sort nodes (and the matrix with them) so ids increase.
  std::vector<int> perm(nodes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int x, int y) { return nodes[x] < nodes[y]; });
  if (a.size() != nodes.size()) throw Error("matrix size does not match node list");
  std::vector<int> sn;
  Matrix sa(nodes.size(), std::vector<int>(nodes.size()));
  for (size_t p = 0; p < perm.size(); ++p) {
    sn.push_back(nodes[perm[p]]);
    if (a[perm[p]].size() != nodes.size()) throw Error("matrix is not square");
    for (size_t q = 0; q < perm.size(); ++q) sa[p][q] = a[perm[p]][perm[q]];
  }
  CartanData c = make_cartan(sn, sa, j.value("tag", std::string()));
  if (j.contains("d")) {
    std::vector<Rational> given;
    for (auto& x : j["d"]) {
      if (x.is_number_integer())
        given.emplace_back(x.get<long long>());
      else {
        auto s = x.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos)
          given.emplace_back(std::stoll(s));
        else
          given.emplace_back(std::stoll(s.substr(0, slash)),
                             std::stoll(s.substr(slash + 1)));
      }
    }
    if (given.size() != sn.size()) throw Error("symmetrizer has wrong length");
    std::vector<Rational> sorted;
    for (int p : perm) sorted.push_back(given[p]);
    for (size_t i = 0; i < sn.size(); ++i)
      for (size_t k = 0; k < sn.size(); ++k)
        if (sorted[i] * sa[i][k] != sorted[k] * sa[k][i])
          throw Error("given d does not symmetrize a");
  }
  return c;
}

std::string diagram_to_json(const CartanData& c) {
  nlohmann::json j;
  j["nodes"] = c.nodes;
  j["a"] = c.a;
  std::vector<std::string> d;
  for (auto& x : c.d) {
    d.push_back(x.denominator() == 1
                    ? std::to_string(x.numerator())
                    : std::to_string(x.numerator()) + "/" +
                          std::to_string(x.denominator()));
  }
  j["d"] = d;
  if (!c.tag.empty()) j["tag"] = c.tag;
  return j.dump();
}

bool is_finite_type(const CartanData& c, const std::vector<int>& idx) {
  // Sylvester criterion on the symmetrized matrix d_i a_ij, scaled to
  // integers, with fraction-free (Bareiss) elimination.
  const int n = static_cast<int>(idx.size());
  if (n == 0) return true;
  long long den = 1;
  for (int i : idx) den = std::lcm(den, c.d[i].denominator());
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      Rational v = c.d[idx[p]] * c.a[idx[p]][idx[q]] * den;
      m[p][q] = v.numerator();
    }
  __int128 prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return true;
}

bool is_finite_type(const CartanData& c) {
  std::vector<int> all(c.rank());
  std::iota(all.begin(), all.end(), 0);
  return is_finite_type(c, all);
}

MixedWeight fundamental(const CartanData& c, int i) {
  MixedWeight x{IntVec(c.rank(), 0), IntVec(c.rank(), 0)};
  x.w.at(i) = 1;
  return x;
}

MixedWeight weight(const CartanData& c, const IntVec& coeffs) {
  if (static_cast<int>(coeffs.size()) != c.rank())
    throw Error("weight has wrong length");
  return MixedWeight{coeffs, IntVec(c.rank(), 0)};
}

long long pairing(const CartanData& c, const MixedWeight& x, int i) {
  long long s = x.w[i];
  for (int j = 0; j < c.rank(); ++j) s += x.r[j] * c.a[i][j];
  return s;
}

MixedWeight reflect_weight(const CartanData& c, int i, const MixedWeight& x) {
  MixedWeight y = x;
  y.r[i] -= pairing(c, x, i);
  return y;
}

IntVec weight_coords(const CartanData& c, const MixedWeight& x) {
  IntVec v(c.rank());
  for (int i = 0; i < c.rank(); ++i) v[i] = pairing(c, x, i);
  return v;
}

long long root_pairing(const CartanData& c, const IntVec& beta, int i) {
  long long s = 0;
  for (int j = 0; j < c.rank(); ++j) s += beta[j] * c.a[i][j];
  return s;
}

IntVec reflect_root(const CartanData& c, int i, IntVec beta) {
  beta[i] -= root_pairing(c, beta, i);
  return beta;
}

Rational form(const CartanData& c, const IntVec& x, const IntVec& y) {
  Rational s = 0;
  for (int i = 0; i < c.rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < c.rank(); ++j)
      if (y[j] != 0) s += c.d[i] * c.a[i][j] * x[i] * y[j];
  }
  return s;
}

bool is_real_root(const CartanData& c, const IntVec& beta) {
  IntVec b = beta;
  bool neg = std::all_of(b.begin(), b.end(), [](long long x) { return x <= 0; });
  if (neg)
    for (auto& x : b) x = -x;
  for (;;) {
    long long height = 0;
    for (long long x : b) {
      if (x < 0) return false;
      height += x;
    }
    if (height == 0) return false;
    if (height == 1) return true;
    int pick = -1;
    for (int i = 0; i < c.rank(); ++i)
      if (root_pairing(c, b, i) > 0) {
        pick = i;
        break;
      }
    if (pick < 0) return false;
    b = reflect_root(c, pick, b);
  }
}

Rational coroot_pairing(const CartanData& c, const IntVec& x,
                        const IntVec& beta) {
  return form(c, x, beta) * 2 / form(c, beta, beta);
}

Rational coroot_pairing(const CartanData& c, const MixedWeight& x,
                        const IntVec& beta) {
  Rational num = 0;
  for (int j = 0; j < c.rank(); ++j)
    if (beta[j] != 0) num += c.d[j] * beta[j] * pairing(c, x, j);
  return num * 2 / form(c, beta, beta);
}

}  // namespace jdt
