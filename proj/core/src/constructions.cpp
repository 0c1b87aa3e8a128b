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

#include "almonoid/constructions.hpp"

#include <algorithm>
#include <set>

#include "almonoid/errors.hpp"
#include "almonoid/profiles.hpp"

namespace almonoid {

CheckReport check_homomorphism(const Homomorphism& h) {
  CheckReport rep;
  rep.subject = "homomorphism";
  const FiniteAlgebra& s = *h.source;
  const FiniteAlgebra& t = *h.target;

  auto violation = [&](const char* law, std::vector<Elem> w) {
    rep.verdict = Verdict::Fails;
    rep.violations.push_back({law, std::move(w)});
  };

  if (static_cast<int>(h.map.size()) != s.n) {
    violation("map-total", {});
    return rep;
  }
  for (int v : h.map)
    if (v < 0 || v >= t.n) {
      violation("map-range", {Elem::idx(v)});
      return rep;
    }

  if (h.map[s.zero] != t.zero)
    violation("preserves-zero", {Elem::idx(s.zero)});

  struct OpPair {
    const char* law;
    int (FiniteAlgebra::*op)(int, int) const;
  };
  const OpPair ops[] = {
      {"preserves-plus", &FiniteAlgebra::plus_at},
      {"preserves-join", &FiniteAlgebra::join_at},
      {"preserves-meet", &FiniteAlgebra::meet_at},
      {"preserves-star", &FiniteAlgebra::star_at},
  };
  for (const auto& [law, op] : ops) {
    bool done = false;
    for (int x = 0; x < s.n && !done; ++x)
      for (int y = 0; y < s.n; ++y) {
        if (h.map[(s.*op)(x, y)] != (t.*op)(h.map[x], h.map[y])) {
          violation(law, {Elem::idx(x), Elem::idx(y)});
          done = true;
          break;
        }
      }
  }
  return rep;
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b,
                      int size_cap) {
  const long size = static_cast<long>(a.n) * b.n;
  if (size > size_cap)
    throw SizeLimitError("product size " + std::to_string(size) +
                         " exceeds cap " + std::to_string(size_cap));
  FiniteAlgebra p(a.name + "x" + b.name, static_cast<int>(size),
                  a.zero * b.n + b.zero);
  // (i, j) <-> i*|B| + j, row-major.
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j)
      for (int k = 0; k < a.n; ++k)
        for (int l = 0; l < b.n; ++l) {
          const int x = i * b.n + j, y = k * b.n + l;
          p.set_plus(x, y, a.plus_at(i, k) * b.n + b.plus_at(j, l));
          p.set_join(x, y, a.join_at(i, k) * b.n + b.join_at(j, l));
          p.set_meet(x, y, a.meet_at(i, k) * b.n + b.meet_at(j, l));
          p.set_star(x, y, a.star_at(i, k) * b.n + b.star_at(j, l));
        }
  return p;
}

SubalgebraResult subalgebra(const FiniteAlgebra& a,
                            const std::vector<int>& seed) {
  std::set<int> closure(seed.begin(), seed.end());
  closure.insert(a.zero);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> members(closure.begin(), closure.end());
    for (int x : members)
      for (int y : members)
        for (int v : {a.plus_at(x, y), a.join_at(x, y), a.meet_at(x, y),
                      a.star_at(x, y)})
          if (closure.insert(v).second) grew = true;
  }

  SubalgebraResult res;
  res.embedding.assign(closure.begin(), closure.end());  // ascending
  const int m = static_cast<int>(res.embedding.size());
  std::vector<int> back(a.n, -1);
  for (int i = 0; i < m; ++i) back[res.embedding[i]] = i;

  FiniteAlgebra sub(a.name + ".sub", m, back[a.zero]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int x = res.embedding[i], y = res.embedding[j];
      sub.set_plus(i, j, back[a.plus_at(x, y)]);
      sub.set_join(i, j, back[a.join_at(x, y)]);
      sub.set_meet(i, j, back[a.meet_at(x, y)]);
      sub.set_star(i, j, back[a.star_at(x, y)]);
    }
  res.algebra = std::move(sub);
  return res;
}

QuotientResult congruence_quotient(const FiniteAlgebra& a,
                                   const Congruence& theta) {
  if (const auto w = congruence_violation(a, theta)) {
    throw IncompatiblePartitionError(
        "partition is not a congruence: op " + std::string(op_name(w->op)) +
        " at (" + std::to_string(w->a) + "," + std::to_string(w->b) + "," +
        std::to_string(w->c) + "," + std::to_string(w->d) + ")");
  }

  const int k = theta.num_classes();
  QuotientResult res;
  res.class_map = theta.class_of;
  res.representatives.assign(k, a.n);
  for (int x = 0; x < a.n; ++x)
    res.representatives[theta.class_of[x]] =
        std::min(res.representatives[theta.class_of[x]], x);

  FiniteAlgebra q(a.name + "/theta", k, theta.class_of[a.zero]);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int x = res.representatives[i], y = res.representatives[j];
      q.set_plus(i, j, theta.class_of[a.plus_at(x, y)]);
      q.set_join(i, j, theta.class_of[a.join_at(x, y)]);
      q.set_meet(i, j, theta.class_of[a.meet_at(x, y)]);
      q.set_star(i, j, theta.class_of[a.star_at(x, y)]);
    }
  res.algebra = std::move(q);
  return res;
}

FiniteAlgebra drl_to_al(const FiniteAlgebra& a) {
  const DrlResiduals r = compute_residuals(a);
  if (!r.ok)
    throw NotDRlError("no least x with x+b >= a for (a=" +
                          std::to_string(r.fail_a) + ", b=" +
                          std::to_string(r.fail_b) + ")",
                      r.fail_a, r.fail_b);
  FiniteAlgebra out = a;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      out.set_star(x, y,
                   a.join_at(r.minus[x * a.n + y], r.minus[y * a.n + x]));
  return out;
}

}  // namespace almonoid
