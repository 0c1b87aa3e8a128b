//  Copyright 2026 The almonoid Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "almonoid/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "almonoid/catalog.hpp"
#include "almonoid/checker.hpp"
#include "almonoid/errors.hpp"

namespace almonoid {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

Congruence from_union_find(UnionFind& uf) {
  Congruence c;
  c.class_of.resize(uf.parent.size());
  for (size_t i = 0; i < uf.parent.size(); ++i)
    c.class_of[i] = uf.find(static_cast<int>(i));
  c.normalize();
  return c;
}

int table_at(const FiniteAlgebra& alg, OpSym op, int a, int b) {
  switch (op) {
    case OpSym::Plus: return alg.plus_at(a, b);
    case OpSym::Join: return alg.join_at(a, b);
    case OpSym::Meet: return alg.meet_at(a, b);
    case OpSym::Star: return alg.star_at(a, b);
  }
  return 0;
}

constexpr OpSym kOps[] = {OpSym::Plus, OpSym::Join, OpSym::Meet, OpSym::Star};

}  // namespace

Congruence Congruence::identity(int n) {
  Congruence c;
  c.class_of.resize(n);
  std::iota(c.class_of.begin(), c.class_of.end(), 0);
  return c;
}

Congruence Congruence::full(int n) {
  Congruence c;
  c.class_of.assign(n, 0);
  return c;
}

Congruence Congruence::from_classes(
    int n, const std::vector<std::vector<int>>& classes) {
  Congruence c;
  c.class_of.assign(n, -1);
  int id = 0;
  for (const auto& cls : classes) {
    for (int x : cls) {
      if (x < 0 || x >= n || c.class_of[x] != -1)
        throw std::invalid_argument("not a partition of the carrier");
      c.class_of[x] = id;
    }
    ++id;
  }
  for (int v : c.class_of)
    if (v == -1) throw std::invalid_argument("partition misses an element");
  c.normalize();
  return c;
}

void Congruence::normalize() {
  int mx = 0;
  for (int v : class_of) mx = std::max(mx, v);
  std::vector<int> rename(mx + 1, -1);
  int next = 0;
  for (int& v : class_of) {
    if (rename[v] == -1) rename[v] = next++;
    v = rename[v];
  }
}

int Congruence::num_classes() const {
  int m = -1;
  for (int v : class_of) m = std::max(m, v);
  return m + 1;
}

std::vector<std::vector<int>> Congruence::classes() const {
  std::vector<std::vector<int>> out(num_classes());
  for (size_t i = 0; i < class_of.size(); ++i)
    out[class_of[i]].push_back(static_cast<int>(i));
  return out;
}

std::string Congruence::to_text() const {
  std::string out = "[";
  const auto cls = classes();
  for (size_t i = 0; i < cls.size(); ++i) {
    out += i ? ",[" : "[";
    for (size_t j = 0; j < cls[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(cls[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

std::optional<CompatibilityWitness> congruence_violation(
    const FiniteAlgebra& alg, const Congruence& part) {
  if (part.size() != alg.n)
    throw std::invalid_argument("partition size mismatch");
  for (OpSym op : kOps)
    for (int a = 0; a < alg.n; ++a)
      for (int b = 0; b < alg.n; ++b) {
        if (!part.same(a, b)) continue;
        for (int c = 0; c < alg.n; ++c)
          for (int d = 0; d < alg.n; ++d) {
            if (!part.same(c, d)) continue;
            if (!part.same(table_at(alg, op, a, c), table_at(alg, op, b, d)))
              return CompatibilityWitness{op, a, b, c, d};
          }
      }
  return std::nullopt;
}

bool is_congruence(const FiniteAlgebra& alg, const Congruence& part) {
  return !congruence_violation(alg, part).has_value();
}

std::vector<Congruence> all_congruences(const FiniteAlgebra& alg, int bound) {
  if (alg.n > bound)
    throw SizeLimitError("congruence lattice limited to carriers of size " +
                         std::to_string(bound));
  // Restricted-growth strings enumerate all partitions; compatibility
  // filtering keeps the congruences.
  std::vector<Congruence> out;
  std::vector<int> rgs(alg.n, 0);
  for (;;) {
    Congruence c;
    c.class_of = rgs;
    if (is_congruence(alg, c)) out.push_back(std::move(c));

    // Next restricted-growth string.
    int i = alg.n - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }

  // Finest first, then lexicographic class structure.
  std::stable_sort(out.begin(), out.end(),
                   [](const Congruence& a, const Congruence& b) {
                     if (a.num_classes() != b.num_classes())
                       return a.num_classes() > b.num_classes();
                     return a.class_of < b.class_of;
                   });
  return out;
}

Congruence principal_congruence(const FiniteAlgebra& alg, int a, int b) {
  UnionFind uf(alg.n);
  uf.unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < alg.n; ++x)
      for (int y = x + 1; y < alg.n; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (int c = 0; c < alg.n; ++c)
          for (OpSym op : kOps) {
            if (uf.unite(table_at(alg, op, x, c), table_at(alg, op, y, c)))
              changed = true;
            if (uf.unite(table_at(alg, op, c, x), table_at(alg, op, c, y)))
              changed = true;
          }
      }
  }
  return from_union_find(uf);
}

Congruence congruence_meet(const Congruence& x, const Congruence& y) {
  // Class-wise intersection.
  Congruence c;
  const int n = x.size();
  c.class_of.assign(n, 0);
  for (int i = 0; i < n; ++i)
    c.class_of[i] = x.class_of[i] * n + y.class_of[i];
  c.normalize();
  return c;
}

Congruence congruence_join(const FiniteAlgebra& alg, const Congruence& x,
                           const Congruence& y) {
  // Transitive closure of the union, then compatibility closure: the join
  // in Con(A) is the generated congruence, not the raw union.
  UnionFind uf(alg.n);
  for (int i = 0; i < alg.n; ++i)
    for (int j = i + 1; j < alg.n; ++j)
      if (x.same(i, j) || y.same(i, j)) uf.unite(i, j);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < alg.n; ++i)
      for (int j = i + 1; j < alg.n; ++j) {
        if (uf.find(i) != uf.find(j)) continue;
        for (int c = 0; c < alg.n; ++c)
          for (OpSym op : kOps) {
            if (uf.unite(table_at(alg, op, i, c), table_at(alg, op, j, c)))
              changed = true;
            if (uf.unite(table_at(alg, op, c, i), table_at(alg, op, c, j)))
              changed = true;
          }
      }
  }
  return from_union_find(uf);
}

ConReport check_con_permutable(const FiniteAlgebra& alg, int bound) {
  const auto cons = all_congruences(alg, bound);
  ConReport rep;
  rep.lattice_size = static_cast<int>(cons.size());
  const int n = alg.n;

  // compose(t, p)[a][c]: exists b with a t b p c.
  auto compose = [&](const Congruence& t, const Congruence& p) {
    std::vector<bool> rel(n * n, false);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!t.same(a, b)) continue;
        for (int c = 0; c < n; ++c)
          if (p.same(b, c)) rel[a * n + c] = true;
      }
    return rel;
  };

  for (size_t i = 0; i < cons.size() && rep.holds; ++i)
    for (size_t j = i + 1; j < cons.size() && rep.holds; ++j) {
      const auto tp = compose(cons[i], cons[j]);
      const auto pt = compose(cons[j], cons[i]);
      for (int a = 0; a < n && rep.holds; ++a)
        for (int c = 0; c < n; ++c)
          if (tp[a * n + c] != pt[a * n + c]) {
            rep.holds = false;
            rep.perm_witness = PermutabilityWitness{
                static_cast<int>(i), static_cast<int>(j), a, c};
            break;
          }
    }
  return rep;
}

ConReport check_con_distributive(const FiniteAlgebra& alg, int bound) {
  const auto cons = all_congruences(alg, bound);
  ConReport rep;
  rep.lattice_size = static_cast<int>(cons.size());

  auto index_of = [&](const Congruence& c) {
    for (size_t i = 0; i < cons.size(); ++i)
      if (cons[i].class_of == c.class_of) return static_cast<int>(i);
    throw std::logic_error("congruence lattice not closed");
  };

  const int k = static_cast<int>(cons.size());
  std::vector<int> meet_tab(k * k), join_tab(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      meet_tab[i * k + j] = index_of(congruence_meet(cons[i], cons[j]));
      join_tab[i * k + j] = index_of(congruence_join(alg, cons[i], cons[j]));
    }

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        const int lhs = meet_tab[i * k + join_tab[j * k + l]];
        const int rhs = join_tab[meet_tab[i * k + j] * k + meet_tab[i * k + l]];
        if (lhs != rhs) {
          rep.holds = false;
          rep.dist_witness = std::array<int, 3>{i, j, l};
          return rep;
        }
      }
  return rep;
}

std::array<ClaimReport, 3> pixley_check(const Model& m,
                                        const CheckOptions& opts) {
  return {check_claim(m, *catalog_claim("Tl_m1"), opts),
          check_claim(m, *catalog_claim("Tl_m2"), opts),
          check_claim(m, *catalog_claim("Tl_m3"), opts)};
}

}  // namespace almonoid
