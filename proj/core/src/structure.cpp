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

#include "almonoid/structure.hpp"

#include <algorithm>
#include <map>

#include "almonoid/errors.hpp"

namespace almonoid {

namespace {

StructureItem item_holds(const char* name) {
  return StructureItem{name, Verdict::Holds, {}, ""};
}

StructureItem item_fails(const char* name, std::vector<Elem> witness,
                         std::string note = "") {
  return StructureItem{name, Verdict::Fails, std::move(witness),
                       std::move(note)};
}

// Inverse map of a finite model: a -> b with a+b = 0. Inverses in a
// commutative monoid are unique when they exist.
std::map<int, int> finite_inverses(const FiniteAlgebra& a) {
  std::map<int, int> inv;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (a.plus_at(x, y) == a.zero) {
        inv.emplace(x, y);
        break;
      }
  return inv;
}

}  // namespace

StructureReport invertibles(const FiniteAlgebra& a) {
  StructureReport rep;
  rep.analysis = "invertibles";
  rep.subject = a.name;

  const auto inv = finite_inverses(a);
  for (const auto& [x, y] : inv) {
    rep.elements.push_back(Elem::idx(x));
    rep.pairs.emplace_back(Elem::idx(x), Elem::idx(y));
  }

  auto is_inv = [&](int x) { return inv.count(x) > 0; };

  // Inverse map really inverts, and involutes.
  {
    StructureItem it = item_holds("inverse-map-verified");
    for (const auto& [x, y] : inv) {
      if (a.plus_at(x, y) != a.zero || !is_inv(y) || inv.at(y) != x) {
        it = item_fails("inverse-map-verified", {Elem::idx(x)});
        break;
      }
    }
    rep.items.push_back(std::move(it));
  }

  // Lemma: y+x = 0 implies y = 0*x.
  {
    StructureItem it = item_holds("inverse-eq-zero-star");
    for (const auto& [x, y] : inv)
      if (y != a.star_at(a.zero, x)) {
        it = item_fails("inverse-eq-zero-star", {Elem::idx(x), Elem::idx(y)});
        break;
      }
    rep.items.push_back(std::move(it));
  }

  // Closure of the unit set under +, join, meet.
  {
    struct {
      const char* name;
      int (FiniteAlgebra::*op)(int, int) const;
    } closure[] = {{"closed-under-plus", &FiniteAlgebra::plus_at},
                   {"closed-under-join", &FiniteAlgebra::join_at},
                   {"closed-under-meet", &FiniteAlgebra::meet_at}};
    for (const auto& [name, op] : closure) {
      StructureItem it = item_holds(name);
      for (const auto& [x, _] : inv) {
        for (const auto& [y, __] : inv)
          if (!is_inv((a.*op)(x, y))) {
            it = item_fails(name, {Elem::idx(x), Elem::idx(y)});
            break;
          }
        if (it.verdict == Verdict::Fails) break;
      }
      rep.items.push_back(std::move(it));
    }
  }

  // Invertibility theorem: (1) a^0 invertible for every a; (2) a invertible
  // implies a^b invertible; (3) a invertible implies a|0 invertible;
  // (4) a, b invertible implies a^b invertible.
  {
    StructureItem it = item_holds("meet-zero-invertible");
    for (int x = 0; x < a.n; ++x)
      if (!is_inv(a.meet_at(x, a.zero))) {
        it = item_fails("meet-zero-invertible", {Elem::idx(x)});
        break;
      }
    rep.items.push_back(std::move(it));
  }
  {
    StructureItem it = item_holds("invertible-meet-any");
    for (const auto& [x, _] : inv) {
      for (int b = 0; b < a.n; ++b)
        if (!is_inv(a.meet_at(x, b))) {
          it = item_fails("invertible-meet-any", {Elem::idx(x), Elem::idx(b)});
          break;
        }
      if (it.verdict == Verdict::Fails) break;
    }
    rep.items.push_back(std::move(it));
  }
  {
    StructureItem it = item_holds("invertible-join-zero");
    for (const auto& [x, _] : inv)
      if (!is_inv(a.join_at(x, a.zero))) {
        it = item_fails("invertible-join-zero", {Elem::idx(x)});
        break;
      }
    rep.items.push_back(std::move(it));
  }

  return rep;
}

StructureReport invertible_formulas_check(const Model& m) {
  StructureReport rep;
  rep.analysis = "invertible-formulas";
  rep.subject = m.name();

  // Invertible elements with inverses. Windowed integers invert exactly
  // (-k stays in the window); adjoined symbols are absorbing, never units.
  std::vector<std::pair<Elem, Elem>> units;
  if (const FiniteAlgebra* fa = m.finite()) {
    for (const auto& [x, y] : finite_inverses(*fa))
      units.emplace_back(Elem::idx(x), Elem::idx(y));
  } else {
    for (const Elem& e : m.domain())
      if (e.tag == Elem::Tag::Int) units.emplace_back(e, Elem::num(-e.val));
  }
  for (const auto& [x, y] : units) {
    rep.elements.push_back(x);
    rep.pairs.emplace_back(x, y);
  }
  if (units.size() <= 1) {
    rep.items.push_back(item_holds("vacuous"));
    rep.items.back().note = "trivial unit group";
  }

  uint64_t skipped = 0;
  auto minus = [&](const std::pair<Elem, Elem>& a,
                   const std::pair<Elem, Elem>& b) {
    return m.plus(a.first, b.second);  // a + (-b)
  };

  // a*b = (a-b) | (b-a) on invertible pairs.
  {
    StructureItem it = item_holds("star-eq-join-of-differences");
    for (const auto& pa : units) {
      for (const auto& pb : units) {
        const Eval d1 = minus(pa, pb), d2 = minus(pb, pa);
        const Eval s = m.star(pa.first, pb.first);
        if (!d1.is_ok() || !d2.is_ok() || !s.is_ok()) {
          ++skipped;
          continue;
        }
        const Eval j = m.join(d1.value, d2.value);
        if (!j.is_ok()) {
          ++skipped;
          continue;
        }
        if (!(j.value == s.value)) {
          it = item_fails("star-eq-join-of-differences", {pa.first, pb.first});
          break;
        }
      }
      if (it.verdict == Verdict::Fails) break;
    }
    rep.items.push_back(std::move(it));
  }

  // a*(a^b) = (a-b) | 0 on invertible pairs.
  {
    StructureItem it = item_holds("star-meet-eq-positive-difference");
    for (const auto& pa : units) {
      for (const auto& pb : units) {
        const Eval mt = m.meet(pa.first, pb.first);
        const Eval d1 = minus(pa, pb);
        if (!mt.is_ok() || !d1.is_ok()) {
          ++skipped;
          continue;
        }
        const Eval lhs = m.star(pa.first, mt.value);
        const Eval rhs = m.join(d1.value, m.zero());
        if (!lhs.is_ok() || !rhs.is_ok()) {
          ++skipped;
          continue;
        }
        if (!(lhs.value == rhs.value)) {
          it = item_fails("star-meet-eq-positive-difference",
                          {pa.first, pb.first});
          break;
        }
      }
      if (it.verdict == Verdict::Fails) break;
    }
    rep.items.push_back(std::move(it));
  }

  // a+x = b+x implies a = b for invertible x.
  {
    StructureItem it = item_holds("cancellation");
    for (const auto& px : units) {
      for (const Elem& a : m.domain()) {
        for (const Elem& b : m.domain()) {
          const Eval l = m.plus(a, px.first), r = m.plus(b, px.first);
          if (!l.is_ok() || !r.is_ok()) {
            ++skipped;
            continue;
          }
          if (l.value == r.value && !(a == b)) {
            it = item_fails("cancellation", {a, b, px.first});
            break;
          }
        }
        if (it.verdict == Verdict::Fails) break;
      }
      if (it.verdict == Verdict::Fails) break;
    }
    rep.items.push_back(std::move(it));
  }

  if (skipped > 0) {
    for (auto& it : rep.items)
      if (it.verdict == Verdict::Holds && it.name != "vacuous") {
        it.verdict = Verdict::Inconclusive;
        it.note = "skipped " + std::to_string(skipped) + " out-of-window";
      }
  }
  return rep;
}

StructureReport idempotents(const Model& m) {
  StructureReport rep;
  rep.analysis = "idempotents";
  rep.subject = m.name();

  // An out-of-window a+a cannot equal the in-window a, so OutOfWindow
  // soundly means "not idempotent" here.
  std::vector<Elem> idem;
  for (const Elem& a : m.domain()) {
    const Eval s = m.plus(a, a);
    if (s.is_ok() && s.value == a) idem.push_back(a);
  }
  rep.elements = idem;

  uint64_t skipped = 0;
  auto check_pairs = [&](const char* name, auto&& pred) {
    StructureItem it = item_holds(name);
    for (const Elem& a : idem) {
      for (const Elem& b : idem) {
        const int r = pred(a, b);  // 1 holds, 0 fails, -1 skip
        if (r < 0) {
          ++skipped;
        } else if (r == 0) {
          it = item_fails(name, {a, b});
          break;
        }
      }
      if (it.verdict == Verdict::Fails) break;
    }
    rep.items.push_back(std::move(it));
  };

  {
    StructureItem it = item_holds("idempotent-geq-zero");
    for (const Elem& a : idem)
      if (!m.leq(m.zero(), a)) {
        it = item_fails("idempotent-geq-zero", {a});
        break;
      }
    rep.items.push_back(std::move(it));
  }

  auto is_idem = [&](Elem x) {
    const Eval s = m.plus(x, x);
    return s.is_ok() && s.value == x;
  };

  check_pairs("meet-idempotent", [&](Elem a, Elem b) {
    const Eval mt = m.meet(a, b);
    if (!mt.is_ok()) return -1;
    return is_idem(mt.value) ? 1 : 0;
  });
  check_pairs("join-eq-plus", [&](Elem a, Elem b) {
    const Eval j = m.join(a, b);
    const Eval p = m.plus(a, b);
    if (!j.is_ok() || !p.is_ok()) return -1;
    return j.value == p.value ? 1 : 0;
  });
  check_pairs("join-and-plus-idempotent", [&](Elem a, Elem b) {
    const Eval j = m.join(a, b);
    const Eval p = m.plus(a, b);
    if (!j.is_ok() || !p.is_ok()) return -1;
    return is_idem(j.value) && is_idem(p.value) ? 1 : 0;
  });
  check_pairs("plus-decomposition", [&](Elem a, Elem b) {
    const Eval j = m.join(a, b);
    const Eval mt = m.meet(a, b);
    const Eval p = m.plus(a, b);
    if (!j.is_ok() || !mt.is_ok() || !p.is_ok()) return -1;
    const Eval rhs = m.plus(j.value, mt.value);
    if (!rhs.is_ok()) return -1;
    return p.value == rhs.value ? 1 : 0;
  });

  if (skipped > 0)
    for (auto& it : rep.items)
      if (it.verdict == Verdict::Holds) {
        it.verdict = Verdict::Inconclusive;
        it.note = "skipped " + std::to_string(skipped) + " out-of-window";
      }
  return rep;
}

StructureReport find_unity(const Model& m) {
  StructureReport rep;
  rep.analysis = "unity";
  rep.subject = m.name();

  // Independent scan for every u with a+(a*u) = u+u; a candidate must
  // verify with no out-of-window evaluation.
  std::vector<Elem> candidates;
  for (const Elem& u : m.domain()) {
    bool ok = true;
    for (const Elem& a : m.domain()) {
      const Eval d = m.star(a, u);
      const Eval rhs = m.plus(u, u);
      if (!d.is_ok() || !rhs.is_ok()) {
        ok = false;
        break;
      }
      const Eval lhs = m.plus(a, d.value);
      if (!lhs.is_ok() || !(lhs.value == rhs.value)) {
        ok = false;
        break;
      }
    }
    if (ok) candidates.push_back(u);
  }

  if (candidates.empty()) {
    rep.items.push_back(item_holds("unity-absent"));
    return rep;
  }
  rep.distinguished = candidates.front();
  rep.elements = candidates;

  if (candidates.size() > 1) {
    rep.items.push_back(item_fails("unambiguous", candidates,
                                   "multiple unity candidates; lowest wins"));
  } else {
    rep.items.push_back(item_holds("unambiguous"));
  }

  const Elem u = *rep.distinguished;
  {
    const Eval uu = m.plus(u, u);
    rep.items.push_back(uu.is_ok() && uu.value == u
                            ? item_holds("unity-plus-idempotent")
                            : item_fails("unity-plus-idempotent", {u}));
  }
  {
    StructureItem it = item_holds("positive-cone-below-unity");
    for (const Elem& a : m.domain()) {
      if (!m.leq(m.zero(), a)) continue;
      if (!m.leq(a, u)) {
        it = item_fails("positive-cone-below-unity", {a});
        break;
      }
    }
    rep.items.push_back(std::move(it));
  }
  return rep;
}

StructureReport complemented(const FiniteAlgebra& a) {
  Model m(a);
  if (!m.unity()) throw NoUnityError("model has no unity: " + a.name);
  const int one = m.unity()->val;
  const int zero = a.zero;

  StructureReport rep;
  rep.analysis = "complemented";
  rep.subject = a.name;
  rep.distinguished = Elem::idx(one);

  std::vector<int> comp_of(a.n, -1);
  std::vector<int> members;
  StructureItem unique = item_holds("complement-unique");
  for (int x = 0; x < a.n; ++x) {
    for (int y = 0; y < a.n; ++y)
      if (a.meet_at(x, y) == zero && a.join_at(x, y) == one) {
        if (comp_of[x] == -1) {
          comp_of[x] = y;
        } else if (unique.verdict == Verdict::Holds) {
          unique = item_fails("complement-unique",
                              {Elem::idx(x), Elem::idx(comp_of[x]),
                               Elem::idx(y)});
        }
      }
    if (comp_of[x] != -1) {
      members.push_back(x);
      rep.elements.push_back(Elem::idx(x));
      rep.pairs.emplace_back(Elem::idx(x), Elem::idx(comp_of[x]));
    }
  }
  rep.items.push_back(std::move(unique));

  auto in_set = [&](int x) { return comp_of[x] != -1; };

  {
    StructureItem it = item_holds("complement-eq-star-one");
    for (int x : members)
      if (comp_of[x] != a.star_at(x, one)) {
        it = item_fails("complement-eq-star-one",
                        {Elem::idx(x), Elem::idx(comp_of[x])});
        break;
      }
    rep.items.push_back(std::move(it));
  }
  {
    StructureItem it = item_holds("complemented-plus-idempotent");
    for (int x : members)
      if (a.plus_at(x, x) != x) {
        it = item_fails("complemented-plus-idempotent", {Elem::idx(x)});
        break;
      }
    rep.items.push_back(std::move(it));
  }

  // Boolean-algebra laws on the complemented set, exhaustively.
  auto pairs_law = [&](const char* name, auto&& pred) {
    StructureItem it = item_holds(name);
    for (int x : members) {
      for (int y : members)
        if (!pred(x, y)) {
          it = item_fails(name, {Elem::idx(x), Elem::idx(y)});
          break;
        }
      if (it.verdict == Verdict::Fails) break;
    }
    rep.items.push_back(std::move(it));
  };
  auto triples_law = [&](const char* name, auto&& pred) {
    StructureItem it = item_holds(name);
    for (int x : members) {
      for (int y : members) {
        for (int z : members)
          if (!pred(x, y, z)) {
            it = item_fails(name, {Elem::idx(x), Elem::idx(y), Elem::idx(z)});
            break;
          }
        if (it.verdict == Verdict::Fails) break;
      }
      if (it.verdict == Verdict::Fails) break;
    }
    rep.items.push_back(std::move(it));
  };

  pairs_law("closed-under-join",
            [&](int x, int y) { return in_set(a.join_at(x, y)); });
  pairs_law("closed-under-meet",
            [&](int x, int y) { return in_set(a.meet_at(x, y)); });
  {
    StructureItem it = item_holds("closed-under-complement");
    for (int x : members)
      if (!in_set(comp_of[x])) {
        it = item_fails("closed-under-complement", {Elem::idx(x)});
        break;
      }
    rep.items.push_back(std::move(it));
  }
  {
    StructureItem it = item_holds("bounds-complemented");
    if (!in_set(zero) || !in_set(one))
      it = item_fails("bounds-complemented", {Elem::idx(zero), Elem::idx(one)});
    rep.items.push_back(std::move(it));
  }
  pairs_law("join-commutative",
            [&](int x, int y) { return a.join_at(x, y) == a.join_at(y, x); });
  pairs_law("meet-commutative",
            [&](int x, int y) { return a.meet_at(x, y) == a.meet_at(y, x); });
  triples_law("join-associative", [&](int x, int y, int z) {
    return a.join_at(a.join_at(x, y), z) == a.join_at(x, a.join_at(y, z));
  });
  triples_law("meet-associative", [&](int x, int y, int z) {
    return a.meet_at(a.meet_at(x, y), z) == a.meet_at(x, a.meet_at(y, z));
  });
  pairs_law("absorption", [&](int x, int y) {
    return a.join_at(x, a.meet_at(x, y)) == x &&
           a.meet_at(x, a.join_at(x, y)) == x;
  });
  triples_law("distributive-join-over-meet", [&](int x, int y, int z) {
    return a.join_at(x, a.meet_at(y, z)) ==
           a.meet_at(a.join_at(x, y), a.join_at(x, z));
  });
  triples_law("distributive-meet-over-join", [&](int x, int y, int z) {
    return a.meet_at(x, a.join_at(y, z)) ==
           a.join_at(a.meet_at(x, y), a.meet_at(x, z));
  });
  {
    StructureItem it = item_holds("identity-bounds");
    for (int x : members)
      if (a.join_at(x, zero) != x || a.meet_at(x, one) != x) {
        it = item_fails("identity-bounds", {Elem::idx(x)});
        break;
      }
    rep.items.push_back(std::move(it));
  }
  {
    StructureItem it = item_holds("complement-laws");
    for (int x : members)
      if (a.meet_at(x, comp_of[x]) != zero || a.join_at(x, comp_of[x]) != one) {
        it = item_fails("complement-laws", {Elem::idx(x)});
        break;
      }
    rep.items.push_back(std::move(it));
  }
  return rep;
}

IsometryResult is_isometry(const FiniteAlgebra& a, const std::vector<int>& map) {
  IsometryResult res;
  if (static_cast<int>(map.size()) != a.n) return res;
  std::vector<bool> seen(a.n, false);
  for (int x = 0; x < a.n; ++x) {
    if (map[x] < 0 || map[x] >= a.n) return res;
    if (seen[map[x]]) {
      for (int y = 0; y < x; ++y)
        if (map[y] == map[x]) {
          res.witness = std::make_pair(Elem::idx(y), Elem::idx(x));
          break;
        }
      return res;
    }
    seen[map[x]] = true;
  }
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (a.star_at(map[x], map[y]) != a.star_at(x, y)) {
        res.witness = std::make_pair(Elem::idx(x), Elem::idx(y));
        return res;
      }
  res.is_isometry = true;
  return res;
}

StructureReport translation_isometry_scan(const FiniteAlgebra& a) {
  StructureReport rep;
  rep.analysis = "translation-isometries";
  rep.subject = a.name;

  const auto inv = finite_inverses(a);
  StructureItem it = item_holds("isometry-iff-invertible");
  for (int t = 0; t < a.n; ++t) {
    std::vector<int> map(a.n);
    for (int x = 0; x < a.n; ++x) map[x] = a.plus_at(t, x);
    const bool isom = is_isometry(a, map).is_isometry;
    const bool invertible = inv.count(t) > 0;
    if (isom) rep.elements.push_back(Elem::idx(t));
    if (isom != invertible) {
      it.verdict = Verdict::Fails;
      it.witness.push_back(Elem::idx(t));
    }
  }
  rep.items.push_back(std::move(it));
  return rep;
}

StructureReport star_translation_scan(const FiniteAlgebra& a) {
  StructureReport rep;
  rep.analysis = "star-translations";
  rep.subject = a.name;

  StructureItem premise = item_holds("premise-star-maps-are-isometries");
  for (int t = 0; t < a.n; ++t) {
    std::vector<int> map(a.n);
    for (int x = 0; x < a.n; ++x) map[x] = a.star_at(t, x);
    const auto res = is_isometry(a, map);
    if (!res.is_isometry) {
      premise.verdict = Verdict::Fails;
      premise.witness = {Elem::idx(t)};
      if (res.witness) {
        premise.witness.push_back(res.witness->first);
        premise.witness.push_back(res.witness->second);
      }
      break;
    }
  }
  const bool premise_holds = premise.verdict == Verdict::Holds;
  rep.items.push_back(std::move(premise));

  StructureItem concl = item_holds("conclusion-boolean-algebra");
  if (premise_holds) {
    try {
      const StructureReport c = complemented(a);
      if (static_cast<int>(c.elements.size()) != a.n) {
        concl = item_fails("conclusion-boolean-algebra", {},
                           "not every element complemented");
      } else if (c.overall() != Verdict::Holds) {
        concl = item_fails("conclusion-boolean-algebra", {},
                           "Boolean laws fail on the complemented set");
      }
    } catch (const NoUnityError&) {
      concl = item_fails("conclusion-boolean-algebra", {}, "no unity");
    }
  } else {
    concl.note = "premise fails; implication vacuous";
  }
  rep.items.push_back(std::move(concl));
  return rep;
}

PositiveConeResult positive_cone(const FiniteAlgebra& a) {
  PositiveConeResult res;
  res.report.analysis = "positive-cone";
  res.report.subject = a.name;

  std::vector<int> members;
  for (int x = 0; x < a.n; ++x)
    if (a.leq(a.zero, x)) {
      members.push_back(x);
      res.report.elements.push_back(Elem::idx(x));
    }

  std::vector<int> back(a.n, -1);
  for (size_t i = 0; i < members.size(); ++i) back[members[i]] = i;

  StructureItem closed = item_holds("cone-closed");
  for (int x : members) {
    for (int y : members) {
      for (int v : {a.plus_at(x, y), a.join_at(x, y), a.meet_at(x, y),
                    a.star_at(x, y)})
        if (back[v] == -1) {
          closed = item_fails("cone-closed", {Elem::idx(x), Elem::idx(y)});
          break;
        }
      if (closed.verdict == Verdict::Fails) break;
    }
    if (closed.verdict == Verdict::Fails) break;
  }
  const bool is_closed = closed.verdict == Verdict::Holds;
  res.report.items.push_back(std::move(closed));
  if (!is_closed) return res;

  const int k = static_cast<int>(members.size());
  FiniteAlgebra cone(a.name + ".cone", k, back[a.zero]);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int x = members[i], y = members[j];
      cone.set_plus(i, j, back[a.plus_at(x, y)]);
      cone.set_join(i, j, back[a.join_at(x, y)]);
      cone.set_meet(i, j, back[a.meet_at(x, y)]);
      cone.set_star(i, j, back[a.star_at(x, y)]);
    }
  res.embedding = members;

  res.drl = check_drl(Model(cone));

  // a-b = a*(a^b) on the cone.
  StructureItem formula = item_holds("residual-eq-star-meet");
  const DrlResiduals r = compute_residuals(cone);
  if (!r.ok) {
    formula = item_fails("residual-eq-star-meet",
                         {Elem::idx(members[r.fail_a]),
                          Elem::idx(members[r.fail_b])},
                         "residual missing");
  } else {
    for (int i = 0; i < k && formula.verdict == Verdict::Holds; ++i)
      for (int j = 0; j < k; ++j)
        if (r.minus[i * k + j] != cone.star_at(i, cone.meet_at(i, j))) {
          formula = item_fails(
              "residual-eq-star-meet",
              {Elem::idx(members[i]), Elem::idx(members[j])});
          break;
        }
  }
  res.report.items.push_back(std::move(formula));
  res.cone = std::move(cone);
  return res;
}

}  // namespace almonoid
