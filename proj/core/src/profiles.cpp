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

#include "almonoid/profiles.hpp"

#include <stdexcept>

#include "almonoid/catalog.hpp"

namespace almonoid {

namespace {

struct ProfileItem {
  const char* axiom;     // label in the report
  const char* claim_id;  // law or catalog claim
};

// Axiom (1) of the distance definition plus commutativity and the order
// laws.
constexpr ProfileItem kAutometrized[] = {
    {"plus-comm", "plus_comm"},
    {"order-reflexive", "ord_refl"},
    {"order-antisymmetric", "ord_antisym"},
    {"metric-positive", "metric_pos"},
    {"metric-zero-self", "metric_zero"},
    {"metric-identity-of-indiscernibles", "metric_ioi"},
    {"metric-symmetric", "metric_sym"},
    {"metric-triangle", "metric_tri"},
};

constexpr ProfileItem kLatticeMonoid[] = {
    {"ax1.plus-comm", "plus_comm"},
    {"ax1.plus-assoc", "plus_assoc"},
    {"ax1.plus-identity", "plus_identity"},
    {"ax1.join-comm", "join_comm"},
    {"ax1.join-assoc", "join_assoc"},
    {"ax1.join-idem", "join_idem"},
    {"ax1.meet-comm", "meet_comm"},
    {"ax1.meet-assoc", "meet_assoc"},
    {"ax1.meet-idem", "meet_idem"},
    {"ax1.absorb-join-meet", "absorb_jm"},
    {"ax1.absorb-meet-join", "absorb_mj"},
    {"ax1.translation", "translation"},
};

constexpr ProfileItem kMetric[] = {
    {"metric-positive", "metric_pos"},
    {"metric-zero-self", "metric_zero"},
    {"metric-identity-of-indiscernibles", "metric_ioi"},
    {"metric-symmetric", "metric_sym"},
    {"metric-triangle", "metric_tri"},
};

constexpr ProfileItem kContractions[] = {
    {"ax3.contraction-plus", "CONTR_plus"},
    {"ax3.contraction-join", "CONTR_join"},
    {"ax3.contraction-meet", "CONTR_meet"},
    {"ax3.contraction-star", "CONTR_star"},
};

constexpr ProfileItem kSemilattice[] = {
    {"plus-comm", "plus_comm"},
    {"plus-assoc", "plus_assoc"},
    {"plus-identity", "plus_identity"},
    {"meet-comm", "meet_comm"},
    {"meet-assoc", "meet_assoc"},
    {"meet-idem", "meet_idem"},
    {"plus-meet-distribution", "plus_meet_dist"},
    {"metric-positive", "metric_pos"},
    {"metric-zero-self", "metric_zero"},
    {"metric-identity-of-indiscernibles", "metric_ioi"},
    {"metric-symmetric", "metric_sym"},
    {"metric-triangle", "metric_tri"},
};

AxiomResult run_item(const Model& m, const ProfileItem& item,
                     const CheckOptions& opts) {
  const Claim* c = find_claim(item.claim_id);
  if (c == nullptr) throw std::logic_error("unknown profile claim");
  const ClaimReport r = check_claim(m, *c, opts);
  AxiomResult ax;
  ax.axiom = item.axiom;
  ax.verdict = r.verdict;
  ax.witness = r.witness;
  ax.checked = r.checked;
  ax.skipped = r.skipped;
  return ax;
}

template <size_t N>
bool run_items(ProfileReport& rep, const Model& m, const ProfileItem (&items)[N],
               const ProfileOptions& opts) {
  for (const auto& item : items) {
    rep.axioms.push_back(run_item(m, item, opts.check));
    if (opts.fast_mode && rep.axioms.back().verdict == Verdict::Fails)
      return false;
  }
  return true;
}

bool run_one(ProfileReport& rep, const Model& m, const char* axiom,
             const char* claim_id, const ProfileOptions& opts) {
  rep.axioms.push_back(run_item(m, ProfileItem{axiom, claim_id}, opts.check));
  return !(opts.fast_mode && rep.axioms.back().verdict == Verdict::Fails);
}

// ---------------------------------------------------------------------------
// DRl axiom (2): existence of the least x with x+b >= a.

// Finite case: scan the carrier for the minimum of the candidate set.
std::optional<int> finite_least_residual(const FiniteAlgebra& alg, int a,
                                         int b) {
  std::vector<int> candidates;
  for (int x = 0; x < alg.n; ++x)
    if (alg.leq(a, alg.plus_at(x, b))) candidates.push_back(x);
  for (int m : candidates) {
    bool least = true;
    for (int x : candidates)
      if (!alg.leq(m, x)) {
        least = false;
        break;
      }
    if (least) return m;
  }
  return std::nullopt;
}

// Windowed case. The three built-in kinds have exactly known operations, so
// least-element existence over the full infinite carrier is decided in
// closed form; the window only bounds which pairs (a, b) are sampled.
struct WindowedResidual {
  bool exists = false;
  bool is_int = false;
  long value = 0;      // when is_int
  Elem symbol;         // when !is_int
};

std::optional<WindowedResidual> windowed_least_residual(
    const WindowedAlgebra& w, Elem a, Elem b) {
  const bool a_int = a.tag == Elem::Tag::Int;
  const bool b_int = b.tag == Elem::Tag::Int;

  if (a_int && b_int) {
    // {x : x+b >= a} = {x >= a-b} in every kind (an adjoined top also
    // qualifies but is never the least); least = a-b.
    WindowedResidual r;
    r.exists = true;
    r.is_int = true;
    r.value = static_cast<long>(a.val) - b.val;
    return r;
  }

  switch (w.kind) {
    case WindowKind::PlainInt:
      break;  // unreachable: no adjoined elements
    case WindowKind::IntWithTop: {
      if (b.tag == Elem::Tag::U) {
        // x+u = u >= a for every x: the candidate set is the whole carrier,
        // which has no least element (the integers are unbounded below).
        return std::nullopt;
      }
      // a = u, b integer: x+b = u only for x = u; least = u.
      WindowedResidual r;
      r.exists = true;
      r.symbol = Elem::u();
      return r;
    }
    case WindowKind::IntWithTopBottom: {
      if (a.tag == Elem::Tag::U) {
        // Everything is >= u; least of the carrier is u itself.
        WindowedResidual r;
        r.exists = true;
        r.symbol = Elem::u();
        return r;
      }
      if (b.tag == Elem::Tag::U) {
        // x+u = u < a for every x: empty candidate set.
        return std::nullopt;
      }
      if (b.tag == Elem::Tag::V) {
        if (a.tag == Elem::Tag::V || a_int) {
          // Candidates are Z u {v} (x+v = v >= a, but u+v = u fails):
          // unbounded below, no least.
          return std::nullopt;
        }
      }
      // a = v, b integer: x+b = v only for x = v; least = v.
      WindowedResidual r;
      r.exists = true;
      r.symbol = Elem::v();
      return r;
    }
  }
  return std::nullopt;
}

// Exact arithmetic on windowed carriers for the DRl axioms (3) and (4):
// values are true integers (no window) or an adjoined symbol.
struct XElem {
  enum class Tag : uint8_t { Int, U, V } tag = Tag::Int;
  long val = 0;

  static XElem num(long k) { return XElem{Tag::Int, k}; }
  static XElem from(Elem e) {
    switch (e.tag) {
      case Elem::Tag::U: return XElem{Tag::U, 0};
      case Elem::Tag::V: return XElem{Tag::V, 0};
      default: return XElem{Tag::Int, e.val};
    }
  }
};

bool xleq(const WindowedAlgebra& w, XElem a, XElem b) {
  switch (w.kind) {
    case WindowKind::PlainInt:
      return a.val <= b.val;
    case WindowKind::IntWithTop:
      if (b.tag == XElem::Tag::U) return true;
      if (a.tag == XElem::Tag::U) return false;
      return a.val <= b.val;
    case WindowKind::IntWithTopBottom:
      if (a.tag == XElem::Tag::U || b.tag == XElem::Tag::V) return true;
      if (a.tag == XElem::Tag::V || b.tag == XElem::Tag::U) return false;
      return a.val <= b.val;
  }
  return false;
}

XElem xplus(const WindowedAlgebra& w, XElem a, XElem b) {
  if (a.tag == XElem::Tag::Int && b.tag == XElem::Tag::Int)
    return XElem::num(a.val + b.val);
  if (w.kind == WindowKind::IntWithTop) return XElem{XElem::Tag::U, 0};
  if (a.tag == XElem::Tag::U || b.tag == XElem::Tag::U)
    return XElem{XElem::Tag::U, 0};
  return XElem{XElem::Tag::V, 0};
}

XElem xjoin(const WindowedAlgebra& w, XElem a, XElem b) {
  return xleq(w, a, b) ? b : a;
}

// ---------------------------------------------------------------------------

void check_drl_axioms(ProfileReport& rep, const Model& m,
                      const ProfileOptions& opts) {
  AxiomResult ax2{"drl2.least-residual", Verdict::Holds, std::nullopt, 0, 0};
  AxiomResult ax3{"drl3.residual-bound", Verdict::Holds, std::nullopt, 0, 0};
  AxiomResult ax4{"drl4.self-residual-positive", Verdict::Holds, std::nullopt,
                  0, 0};
  auto witness = [](Elem a, Elem b) {
    return Assignment{{"a", a}, {"b", b}};
  };

  if (const FiniteAlgebra* alg = m.finite()) {
    std::vector<int> minus(alg->n * alg->n, -1);
    for (int a = 0; a < alg->n && ax2.verdict == Verdict::Holds; ++a)
      for (int b = 0; b < alg->n; ++b) {
        const auto r = finite_least_residual(*alg, a, b);
        ++ax2.checked;
        if (!r) {
          ax2.verdict = Verdict::Fails;
          ax2.witness = witness(Elem::idx(a), Elem::idx(b));
          break;
        }
        minus[a * alg->n + b] = *r;
      }
    if (ax2.verdict == Verdict::Holds) {
      for (int a = 0; a < alg->n && ax3.verdict == Verdict::Holds; ++a)
        for (int b = 0; b < alg->n; ++b) {
          ++ax3.checked;
          const int diff = minus[a * alg->n + b];
          const int lhs = alg->plus_at(alg->join_at(diff, alg->zero), b);
          if (!alg->leq(lhs, alg->join_at(a, b))) {
            ax3.verdict = Verdict::Fails;
            ax3.witness = witness(Elem::idx(a), Elem::idx(b));
            break;
          }
        }
      for (int a = 0; a < alg->n; ++a) {
        ++ax4.checked;
        if (!alg->leq(alg->zero, minus[a * alg->n + a])) {
          ax4.verdict = Verdict::Fails;
          ax4.witness = Assignment{{"a", Elem::idx(a)}};
          break;
        }
      }
    } else {
      ax3.verdict = Verdict::Inconclusive;
      ax4.verdict = Verdict::Inconclusive;
    }
  } else {
    const WindowedAlgebra& w = *m.windowed();
    for (const Elem& a : m.domain()) {
      if (ax2.verdict == Verdict::Fails && opts.fast_mode) break;
      for (const Elem& b : m.domain()) {
        const auto r = windowed_least_residual(w, a, b);
        ++ax2.checked;
        if (!r) {
          if (ax2.verdict == Verdict::Holds) {
            ax2.verdict = Verdict::Fails;
            ax2.witness = witness(a, b);
          }
          continue;
        }
        // Axioms (3) and (4) evaluated exactly on the found residual.
        const XElem diff =
            r->is_int ? XElem::num(r->value) : XElem::from(r->symbol);
        const XElem lhs =
            xplus(w, xjoin(w, diff, XElem::num(0)), XElem::from(b));
        ++ax3.checked;
        if (!xleq(w, lhs, xjoin(w, XElem::from(a), XElem::from(b)))) {
          if (ax3.verdict == Verdict::Holds) {
            ax3.verdict = Verdict::Fails;
            ax3.witness = witness(a, b);
          }
        }
        if (a == b) {
          ++ax4.checked;
          if (!xleq(w, XElem::num(0), diff)) {
            if (ax4.verdict == Verdict::Holds) {
              ax4.verdict = Verdict::Fails;
              ax4.witness = Assignment{{"a", a}};
            }
          }
        }
      }
    }
  }

  rep.axioms.push_back(std::move(ax2));
  rep.axioms.push_back(std::move(ax3));
  rep.axioms.push_back(std::move(ax4));
}

}  // namespace

std::string_view profile_name(Profile p) {
  switch (p) {
    case Profile::Autometrized: return "autometrized";
    case Profile::LatticeOrdered: return "lattice-ordered";
    case Profile::Representable: return "representable";
    case Profile::SemilatticeOrdered: return "semilattice-ordered";
    case Profile::Drl: return "drl";
    case Profile::AlMonoid: return "al-monoid";
    case Profile::AlMonoidEq: return "al-monoid-eq";
  }
  return "?";
}

std::optional<Profile> profile_from_name(std::string_view name) {
  for (Profile p : all_profiles())
    if (profile_name(p) == name) return p;
  return std::nullopt;
}

std::vector<Profile> all_profiles() {
  return {Profile::Autometrized,       Profile::LatticeOrdered,
          Profile::Representable,      Profile::SemilatticeOrdered,
          Profile::Drl,                Profile::AlMonoid,
          Profile::AlMonoidEq};
}

ProfileReport check_profile(const Model& m, Profile p,
                            const ProfileOptions& opts) {
  ProfileReport rep;
  rep.profile = std::string(profile_name(p));
  rep.subject = m.name();

  switch (p) {
    case Profile::Autometrized:
      run_items(rep, m, kAutometrized, opts);
      break;
    case Profile::LatticeOrdered:
      if (!run_items(rep, m, kLatticeMonoid, opts)) break;
      run_items(rep, m, kMetric, opts);
      break;
    case Profile::Representable:
      if (!run_items(rep, m, kLatticeMonoid, opts)) break;
      if (!run_items(rep, m, kMetric, opts)) break;
      if (!run_one(rep, m, "semiregularity", "semiregular", opts)) break;
      run_items(rep, m, kContractions, opts);
      break;
    case Profile::SemilatticeOrdered:
      run_items(rep, m, kSemilattice, opts);
      break;
    case Profile::Drl:
      if (!run_items(rep, m, kLatticeMonoid, opts)) break;
      check_drl_axioms(rep, m, opts);
      break;
    case Profile::AlMonoid:
      if (!run_items(rep, m, kLatticeMonoid, opts)) break;
      if (!run_one(rep, m, "ax2", "AX2", opts)) break;
      if (!run_items(rep, m, kContractions, opts)) break;
      run_one(rep, m, "ax4", "AX4", opts);
      break;
    case Profile::AlMonoidEq:
      if (!run_items(rep, m, kLatticeMonoid, opts)) break;
      if (!run_one(rep, m, "t1.1", "T1_1", opts)) break;
      if (!run_one(rep, m, "t1.2", "T1_2", opts)) break;
      if (!run_one(rep, m, "t1.3", "T1_3", opts)) break;
      if (!run_items(rep, m, kContractions, opts)) break;
      run_one(rep, m, "ax4", "AX4", opts);
      break;
  }
  return rep;
}

ProfileReport check_autometrized(const Model& m, const ProfileOptions& o) {
  return check_profile(m, Profile::Autometrized, o);
}
ProfileReport check_lattice_ordered(const Model& m, const ProfileOptions& o) {
  return check_profile(m, Profile::LatticeOrdered, o);
}
ProfileReport check_representable(const Model& m, const ProfileOptions& o) {
  return check_profile(m, Profile::Representable, o);
}
ProfileReport check_semilattice_ordered(const Model& m,
                                        const ProfileOptions& o) {
  return check_profile(m, Profile::SemilatticeOrdered, o);
}
ProfileReport check_drl(const Model& m, const ProfileOptions& o) {
  return check_profile(m, Profile::Drl, o);
}
ProfileReport check_al_monoid(const Model& m, const ProfileOptions& o) {
  return check_profile(m, Profile::AlMonoid, o);
}
ProfileReport check_al_monoid_equational(const Model& m,
                                         const ProfileOptions& o) {
  return check_profile(m, Profile::AlMonoidEq, o);
}

DrlResiduals compute_residuals(const FiniteAlgebra& a) {
  DrlResiduals res;
  res.minus.assign(a.n * a.n, -1);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      const auto r = finite_least_residual(a, x, y);
      if (!r) {
        res.ok = false;
        res.fail_a = x;
        res.fail_b = y;
        return res;
      }
      res.minus[x * a.n + y] = *r;
    }
  res.ok = true;
  return res;
}

}  // namespace almonoid
