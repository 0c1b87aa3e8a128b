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

#include "almonoid/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "almonoid/builtins.hpp"
#include "almonoid/catalog.hpp"
#include "almonoid/checker.hpp"
#include "almonoid/errors.hpp"

namespace almonoid {

namespace {

// ---------------------------------------------------------------------------
// Canonical form

std::string serialize_relabeled(const FiniteAlgebra& a,
                                const std::vector<int>& perm) {
  // perm maps old index -> new index.
  const int n = a.n;
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  std::string key;
  key.reserve(2 + 4 * n * n);
  key.push_back(static_cast<char>(n));
  key.push_back(static_cast<char>(perm[a.zero]));
  for (const auto* table : {&a.plus, &a.join, &a.meet, &a.star})
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        key.push_back(static_cast<char>(perm[(*table)[inv[x] * n + inv[y]]]));
  return key;
}

// ---------------------------------------------------------------------------
// Lattice-first enumeration.
//
// Order relations are enumerated as linear extensions: i <= j in the order
// implies i <= j as indices, so the relation lives on index pairs i < j and
// the lattice bottom is always index 0. Every finite lattice has such a
// labeling; canonical-form dedup removes the remaining multiplicity.

struct LatticeTables {
  int n = 0;
  std::vector<int> join, meet;
  std::vector<char> le;  // le[i*n+j] : i <= j

  int join_at(int a, int b) const { return join[a * n + b]; }
  int meet_at(int a, int b) const { return meet[a * n + b]; }
  bool leq(int a, int b) const { return le[a * n + b] != 0; }
};

std::vector<LatticeTables> enumerate_lattices(int n) {
  std::vector<LatticeTables> out;
  std::vector<std::pair<int, int>> free_pairs;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) free_pairs.emplace_back(i, j);

  const uint32_t masks = 1u << free_pairs.size();
  for (uint32_t mask = 0; mask < masks; ++mask) {
    LatticeTables lt;
    lt.n = n;
    lt.le.assign(n * n, 0);
    for (int i = 0; i < n; ++i) lt.le[i * n + i] = 1;
    for (int j = 1; j < n; ++j) lt.le[0 * n + j] = 1;  // index 0 is the bottom
    for (size_t k = 0; k < free_pairs.size(); ++k)
      if (mask & (1u << k))
        lt.le[free_pairs[k].first * n + free_pairs[k].second] = 1;

    // Transitivity (indices only increase along <=).
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i; j < n && ok; ++j) {
        if (!lt.leq(i, j)) continue;
        for (int k = j; k < n; ++k)
          if (lt.leq(j, k) && !lt.leq(i, k)) {
            ok = false;
            break;
          }
      }
    if (!ok) continue;

    // Unique least upper bound / greatest lower bound for every pair.
    lt.join.assign(n * n, -1);
    lt.meet.assign(n * n, -1);
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        int lub = -1, glb = -1;
        for (int c = 0; c < n; ++c) {
          if (lt.leq(a, c) && lt.leq(b, c) && (lub == -1 || lt.leq(c, lub)))
            lub = c;
          if (lt.leq(c, a) && lt.leq(c, b) && (glb == -1 || lt.leq(glb, c)))
            glb = c;
        }
        // The candidate must actually be below / above every bound.
        if (lub == -1 || glb == -1) {
          ok = false;
          break;
        }
        for (int c = 0; c < n; ++c) {
          if (lt.leq(a, c) && lt.leq(b, c) && !lt.leq(lub, c)) ok = false;
          if (lt.leq(c, a) && lt.leq(c, b) && !lt.leq(c, glb)) ok = false;
        }
        lt.join[a * n + b] = lub;
        lt.meet[a * n + b] = glb;
      }
    if (!ok) continue;
    out.push_back(std::move(lt));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Profile-specific constraint sets. Pruning uses literal axiom instances
// only, so the search never loses a model to an unsound shortcut.

struct EnumConfig {
  bool metric = false;        // positivity-iff, symmetry, triangle
  bool semiregular = false;   // a >= 0 implies a*0 = a
  bool contractions = false;  // (a@x)*(a@y) <= x*y for @ in {+,|,^,*}
  bool ax2 = false;           // a*(a^b)+b = a|b
  bool ax4 = false;           // (a*(a|b)) ^ (b*(a|b)) = 0
  bool t1 = false;            // the three equational replacements
  bool drl_derive = false;    // no free star table: derive from residuals
  bool zero_is_bottom = true;
};

EnumConfig config_for(Profile p) {
  EnumConfig c;
  switch (p) {
    case Profile::AlMonoid:
      c.ax2 = c.contractions = c.ax4 = true;
      return c;
    case Profile::AlMonoidEq:
      c.t1 = c.contractions = c.ax4 = true;
      return c;
    case Profile::Drl:
      c.drl_derive = true;
      return c;
    case Profile::LatticeOrdered:
      c.metric = true;
      c.zero_is_bottom = false;
      return c;
    case Profile::Representable:
      c.metric = c.semiregular = c.contractions = true;
      c.zero_is_bottom = false;
      return c;
    default:
      throw std::invalid_argument(
          "profile not enumerable over total lattice tables: " +
          std::string(profile_name(p)));
  }
}

// Internal config for the independence search: axioms (1), (2), (3) only.
EnumConfig config_ax123() {
  EnumConfig c;
  c.ax2 = c.contractions = true;
  return c;
}

// ---------------------------------------------------------------------------

class TableSearch {
 public:
  TableSearch(const LatticeTables& lt, int zero, const EnumConfig& cfg,
              const std::function<bool(const FiniteAlgebra&)>& emit)
      : lt_(lt), n_(lt.n), zero_(zero), cfg_(cfg), emit_(emit) {
    plus_.assign(n_ * n_, -1);
    star_.assign(n_ * n_, -1);
    for (int x = 0; x < n_; ++x) {
      plus_[zero_ * n_ + x] = x;
      plus_[x * n_ + zero_] = x;
    }
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j)
        if (i != zero_ && j != zero_) plus_entries_.emplace_back(i, j);

    // Star entries: diagonal first (forced almost immediately), then
    // comparable pairs (ax2 narrows them), then the rest.
    if (!cfg.drl_derive) {
      const bool diag_zero = cfg.ax4 || cfg.metric;
      for (int i = 0; i < n_; ++i) {
        if (diag_zero)
          star_[i * n_ + i] = zero_;
        else
          star_entries_.emplace_back(i, i);
      }
      auto add_pairs = [&](auto&& want) {
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j)
            if (i != j && want(i, j)) star_entries_.emplace_back(i, j);
      };
      add_pairs([&](int i, int j) { return lt_.leq(j, i); });   // j < i
      add_pairs([&](int i, int j) {
        return lt_.leq(i, j) && !lt_.leq(j, i);                 // i < j
      });
      add_pairs([&](int i, int j) {
        return !lt_.leq(i, j) && !lt_.leq(j, i);                // incomparable
      });
    }
  }

  bool run() { return fill_plus(0); }

 private:
  int plus_at(int a, int b) const { return plus_[a * n_ + b]; }
  int star_at(int a, int b) const { return star_[a * n_ + b]; }

  // --- plus table -----------------------------------------------------

  bool plus_consistent(int a, int b) const {
    const int v = plus_at(a, b);
    // Monotonicity against every set entry sharing a row.
    for (int r : {a, b}) {
      const int o = r == a ? b : a;
      for (int x = 0; x < n_; ++x) {
        const int w = plus_at(r, x);
        if (w < 0) continue;
        if (lt_.leq(x, o) && !lt_.leq(w, v)) return false;
        if (lt_.leq(o, x) && !lt_.leq(v, w)) return false;
      }
    }
    // Associativity on fully determined triples.
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        const int xy = plus_at(x, y);
        if (xy < 0) continue;
        for (int z = 0; z < n_; ++z) {
          const int yz = plus_at(y, z);
          if (yz < 0) continue;
          const int l = plus_at(xy, z), r = plus_at(x, yz);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  }

  bool fill_plus(size_t k) {
    if (k == plus_entries_.size()) {
      if (cfg_.drl_derive) return finish_drl();
      return fill_star(0);
    }
    const auto [i, j] = plus_entries_[k];
    for (int v = 0; v < n_; ++v) {
      plus_[i * n_ + j] = v;
      plus_[j * n_ + i] = v;
      if (plus_consistent(i, j) && !fill_plus(k + 1)) return false;
    }
    plus_[i * n_ + j] = -1;
    plus_[j * n_ + i] = -1;
    return true;
  }

  // --- star table -----------------------------------------------------

  // Checks every constraint instance that involves the entry (a, b) and is
  // fully determined. Instances not touching (a, b) were checked when their
  // last entry was placed.
  bool star_consistent(int a, int b) const {
    const int v = star_at(a, b);

    if (cfg_.metric) {
      if (!lt_.leq(zero_, v)) return false;
      if (a == b && v != zero_) return false;
      if (a != b && v == zero_) return false;
      const int sym = star_at(b, a);
      if (sym >= 0 && sym != v) return false;
      // Triangle: x*y <= x*z + z*y on determined triples touching (a,b).
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
          const int xy = star_at(x, y);
          if (xy < 0) continue;
          for (int z = 0; z < n_; ++z) {
            if (!((x == a && y == b) || (x == a && z == b) ||
                  (z == a && y == b)))
              continue;
            const int xz = star_at(x, z), zy = star_at(z, y);
            if (xz < 0 || zy < 0) continue;
            if (!lt_.leq(xy, plus_at(xz, zy))) return false;
          }
        }
    }

    if (cfg_.semiregular && b == zero_ && lt_.leq(zero_, a) && v != a)
      return false;

    if (cfg_.ax2) {
      // a*(x^y) + y = x|y for every pair whose meet entry is (a, b).
      for (int y = 0; y < n_; ++y) {
        if (lt_.meet_at(a, y) != b) continue;
        if (plus_at(v, y) != lt_.join_at(a, y)) return false;
      }
    }

    if (cfg_.ax4) {
      for (int x = 0; x < n_; ++x) {
        // Pairs (a, x) and (x, a) with join equal to b.
        if (lt_.join_at(a, x) == b) {
          const int other = star_at(x, b);
          if (other >= 0 && lt_.meet_at(v, other) != zero_) return false;
        }
      }
    }

    if (cfg_.t1) {
      // y <= x + (y*x) with (y, x) = (a, b).
      if (!lt_.leq(a, plus_at(b, v))) return false;
      // (x+y)*y <= x for every (x, y) with (x+y, y) = (a, b).
      for (int x = 0; x < n_; ++x)
        if (plus_at(x, b) == a && !lt_.leq(v, x)) return false;
      // x*y <= (x|z)*y: as lower constraint when (x,y)=(a,b), as upper when
      // (x|z, y) = (a, b).
      for (int z = 0; z < n_; ++z) {
        const int up = star_at(lt_.join_at(a, z), b);
        if (up >= 0 && !lt_.leq(v, up)) return false;
      }
      for (int x = 0; x < n_; ++x)
        for (int z = 0; z < n_; ++z)
          if (lt_.join_at(x, z) == a) {
            const int low = star_at(x, b);
            if (low >= 0 && !lt_.leq(low, v)) return false;
          }
    }

    if (cfg_.contractions) {
      // (t @ x) * (t @ y) <= x*y. The new entry may appear on either side.
      for (int t = 0; t < n_; ++t)
        for (int x = 0; x < n_; ++x)
          for (int y = 0; y < n_; ++y) {
            const int sxy = star_at(x, y);
            if (sxy < 0) continue;
            for (int op = 0; op < 4; ++op) {
              int tx, ty;
              switch (op) {
                case 0: tx = plus_at(t, x); ty = plus_at(t, y); break;
                case 1: tx = lt_.join_at(t, x); ty = lt_.join_at(t, y); break;
                case 2: tx = lt_.meet_at(t, x); ty = lt_.meet_at(t, y); break;
                default:
                  tx = star_at(t, x);
                  ty = star_at(t, y);
                  break;
              }
              if (tx < 0 || ty < 0) continue;
              if (!(tx == a && ty == b) && !(x == a && y == b) &&
                  !(op == 3 && ((t == a && x == b) || (t == a && y == b))))
                continue;
              const int lhs = star_at(tx, ty);
              if (lhs < 0) continue;
              if (!lt_.leq(lhs, sxy)) return false;
            }
          }
    }

    return true;
  }

  bool star_complete_check() const {
    // Full re-check of constraints whose instances may straddle entries in
    // unusual ways; cheap at these sizes and removes any reliance on the
    // incremental filter being airtight.
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (cfg_.ax2 &&
            plus_at(star_at(a, lt_.meet_at(a, b)), b) != lt_.join_at(a, b))
          return false;
        if (cfg_.ax4) {
          const int j = lt_.join_at(a, b);
          if (lt_.meet_at(star_at(a, j), star_at(b, j)) != zero_) return false;
        }
      }
    if (cfg_.t1) {
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
          if (!lt_.leq(y, plus_at(x, star_at(y, x)))) return false;
          if (!lt_.leq(star_at(plus_at(x, y), y), x)) return false;
          for (int z = 0; z < n_; ++z)
            if (!lt_.leq(star_at(x, y), star_at(lt_.join_at(x, z), y)))
              return false;
        }
    }
    if (cfg_.metric) {
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
          if ((star_at(x, y) == zero_) != (x == y)) return false;
          if (!lt_.leq(zero_, star_at(x, y))) return false;
          if (star_at(x, y) != star_at(y, x)) return false;
          for (int z = 0; z < n_; ++z)
            if (!lt_.leq(star_at(x, y), plus_at(star_at(x, z), star_at(z, y))))
              return false;
        }
    }
    if (cfg_.semiregular) {
      for (int x = 0; x < n_; ++x)
        if (lt_.leq(zero_, x) && star_at(x, zero_) != x) return false;
    }
    if (cfg_.contractions) {
      for (int t = 0; t < n_; ++t)
        for (int x = 0; x < n_; ++x)
          for (int y = 0; y < n_; ++y) {
            const int sxy = star_at(x, y);
            if (!lt_.leq(star_at(plus_at(t, x), plus_at(t, y)), sxy))
              return false;
            if (!lt_.leq(star_at(lt_.join_at(t, x), lt_.join_at(t, y)), sxy))
              return false;
            if (!lt_.leq(star_at(lt_.meet_at(t, x), lt_.meet_at(t, y)), sxy))
              return false;
            if (!lt_.leq(star_at(star_at(t, x), star_at(t, y)), sxy))
              return false;
          }
    }
    return true;
  }

  bool fill_star(size_t k) {
    if (k == star_entries_.size()) {
      if (!star_complete_check()) return true;
      return emit_model();
    }
    const auto [i, j] = star_entries_[k];
    for (int v = 0; v < n_; ++v) {
      star_[i * n_ + j] = v;
      if (star_consistent(i, j) && !fill_star(k + 1)) return false;
    }
    star_[i * n_ + j] = -1;
    return true;
  }

  // --- DRl: star derived from residuals --------------------------------

  bool finish_drl() {
    // Axiom: for every (a, b) a least x with x+b >= a exists.
    std::vector<int> minus(n_ * n_);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        int least = -1;
        for (int x = 0; x < n_; ++x) {
          if (!lt_.leq(a, plus_at(x, b))) continue;
          if (least == -1 || lt_.leq(x, least)) least = x;
        }
        if (least < 0) return true;
        // Least must be below every member, not merely minimal.
        for (int x = 0; x < n_; ++x)
          if (lt_.leq(a, plus_at(x, b)) && !lt_.leq(least, x)) return true;
        minus[a * n_ + b] = least;
      }
    for (int a = 0; a < n_; ++a) {
      if (!lt_.leq(zero_, minus[a * n_ + a])) return true;
      for (int b = 0; b < n_; ++b) {
        const int lhs = plus_at(lt_.join_at(minus[a * n_ + b], zero_), b);
        if (!lt_.leq(lhs, lt_.join_at(a, b))) return true;
      }
    }
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        star_[a * n_ + b] = lt_.join_at(minus[a * n_ + b], minus[b * n_ + a]);
    const bool keep_going = emit_model();
    star_.assign(n_ * n_, -1);
    return keep_going;
  }

  bool emit_model() {
    FiniteAlgebra out("", n_, zero_);
    out.plus = plus_;
    out.join = lt_.join;
    out.meet = lt_.meet;
    out.star = star_;
    return emit_(out);
  }

  const LatticeTables& lt_;
  const int n_;
  const int zero_;
  const EnumConfig cfg_;
  const std::function<bool(const FiniteAlgebra&)>& emit_;
  std::vector<int> plus_, star_;
  std::vector<std::pair<int, int>> plus_entries_, star_entries_;
};

void raw_enumerate(int n, const EnumConfig& cfg,
                   const std::function<bool(const FiniteAlgebra&)>& emit) {
  const auto lattices = enumerate_lattices(n);
  for (const auto& lt : lattices) {
    if (cfg.zero_is_bottom) {
      TableSearch s(lt, 0, cfg, emit);
      if (!s.run()) return;
    } else {
      for (int zero = 0; zero < n; ++zero) {
        TableSearch s(lt, zero, cfg, emit);
        if (!s.run()) return;
      }
    }
  }
}

const Claim* resolve_violate(const std::string& what) {
  if (const Claim* c = find_claim(what)) return c;
  // Axiom labels of the profile reports.
  if (what == "ax2") return catalog_claim("AX2");
  if (what == "ax4") return catalog_claim("AX4");
  if (what == "ax3.contraction-plus") return catalog_claim("CONTR_plus");
  if (what == "ax3.contraction-join") return catalog_claim("CONTR_join");
  if (what == "ax3.contraction-meet") return catalog_claim("CONTR_meet");
  if (what == "ax3.contraction-star") return catalog_claim("CONTR_star");
  return nullptr;
}

void enumerate_with_config(const SearchSpec& spec, const EnumConfig& cfg,
                           const std::function<bool(const FiniteAlgebra&)>& emit) {
  if (spec.size < 1 || spec.size > kSearchSizeCap)
    throw SizeLimitError("search size must be within 1.." +
                         std::to_string(kSearchSizeCap));
  const Claim* violate = nullptr;
  if (spec.violate) {
    violate = resolve_violate(*spec.violate);
    if (violate == nullptr)
      throw std::invalid_argument("unknown claim or axiom label: " +
                                  *spec.violate);
  }

  std::set<std::string> seen;
  uint64_t emitted = 0;
  uint64_t index = 0;
  CheckOptions copts;
  copts.jobs = spec.jobs;

  raw_enumerate(spec.size, cfg, [&](const FiniteAlgebra& fa) {
    if (spec.canonical && !seen.insert(canonical_form(fa)).second) return true;
    FiniteAlgebra named = fa;
    named.name = std::string(profile_name(spec.satisfy)) + ":" +
                 std::to_string(spec.size) + ":" + std::to_string(index++);
    if (violate != nullptr) {
      const ClaimReport r = check_claim(Model(named), *violate, copts);
      if (r.verdict != Verdict::Fails) return true;
    }
    ++emitted;
    if (!emit(named)) return false;
    return !(spec.limit && emitted >= *spec.limit);
  });
}

}  // namespace

std::string canonical_form(const FiniteAlgebra& a) {
  if (a.n > kCanonicalSizeCap)
    throw SizeLimitError("canonical form limited to carriers of size " +
                         std::to_string(kCanonicalSizeCap));
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key = serialize_relabeled(a, perm);
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void enumerate_models(const SearchSpec& spec,
                      const std::function<bool(const FiniteAlgebra&)>& emit) {
  enumerate_with_config(spec, config_for(spec.satisfy), emit);
}

std::vector<FiniteAlgebra> enumerate_all(const SearchSpec& spec) {
  std::vector<FiniteAlgebra> out;
  enumerate_models(spec, [&](const FiniteAlgebra& fa) {
    out.push_back(fa);
    return true;
  });
  return out;
}

std::optional<Counterexample> find_counterexample(const Claim& claim,
                                                  const SearchSpec& spec) {
  std::optional<Counterexample> found;
  CheckOptions copts;
  copts.jobs = spec.jobs;
  for (int size = 1; size <= spec.size && !found; ++size) {
    SearchSpec s = spec;
    s.size = size;
    s.violate.reset();
    enumerate_models(s, [&](const FiniteAlgebra& fa) {
      const ClaimReport r = check_claim(Model(fa), claim, copts);
      if (r.verdict == Verdict::Fails) {
        found = Counterexample{fa, r};
        return false;
      }
      return true;
    });
  }
  return found;
}

std::optional<Counterexample> find_counterexample(const std::string& claim_id,
                                                  const SearchSpec& spec) {
  const Claim* c = resolve_violate(claim_id);
  if (c == nullptr)
    throw std::invalid_argument("unknown claim or axiom label: " + claim_id);
  return find_counterexample(*c, spec);
}

IndependenceReport independence_report(int window_bound, int max_size) {
  IndependenceReport rep;

  // Direction 1: axiom (2) independent of (1), (3), (4). Witness: the
  // integers with adjoined bottom u and top v.
  {
    IndependenceDirection dir;
    dir.name = "axiom2";
    dir.violated = "ax2";
    const Model m(make_int_with_top_bottom(window_bound));
    dir.model = "intuv:" + std::to_string(window_bound);

    const ProfileReport pr = check_al_monoid(m);
    bool others_clean = true;
    for (const auto& ax : pr.axioms) {
      if (ax.axiom == "ax2") continue;
      if (ax.verdict == Verdict::Fails) others_clean = false;
    }
    if (others_clean) {
      dir.satisfied = {"ax1", "ax3", "ax4"};
    }
    const AxiomResult* ax2 = pr.find("ax2");
    const bool ax2_fails = ax2 != nullptr && ax2->verdict == Verdict::Fails;
    if (ax2_fails) dir.witness = ax2->witness;

    // The decisive pair (v, u), evaluated step by step:
    // v*(v^u) + (v^u) = v*u + u = v + u = u != v = v|u.
    const Elem u = Elem::u(), v = Elem::v();
    const Eval vu_meet = m.meet(v, u);
    const Eval star = m.star(v, vu_meet.value);
    const Eval sum = m.plus(star.value, vu_meet.value);
    const Eval join = m.join(v, u);
    dir.computation = {
        "v^u = " + to_string(vu_meet.value),
        "v*(v^u) = " + to_string(star.value),
        "v*(v^u)+(v^u) = " + to_string(sum.value),
        "v|u = " + to_string(join.value),
        to_string(sum.value) + " != " + to_string(join.value),
    };
    const bool paper_pair_violates =
        sum.is_ok() && join.is_ok() && !(sum.value == join.value);
    dir.established = others_clean && ax2_fails && paper_pair_violates;
    rep.directions.push_back(std::move(dir));
  }

  // Direction 2: axiom (4) independent of (1), (2), (3). Finite search.
  {
    IndependenceDirection dir;
    dir.name = "axiom4";
    dir.violated = "ax4";
    dir.search_bound = max_size;
    const Claim* ax4 = catalog_claim("AX4");
    for (int size = 2; size <= max_size && !dir.established; ++size) {
      std::set<std::string> seen;
      raw_enumerate(size, config_ax123(), [&](const FiniteAlgebra& fa) {
        if (!seen.insert(canonical_form(fa)).second) return true;
        const ClaimReport r = check_claim(Model(fa), *ax4);
        if (r.verdict == Verdict::Fails) {
          dir.established = true;
          dir.satisfied = {"ax1", "ax2", "ax3"};
          dir.witness = r.witness;
          FiniteAlgebra named = fa;
          named.name =
              "ax123:" + std::to_string(size) + ":counterexample-to-ax4";
          dir.model = named.name;
          dir.note = "finite witness of size " + std::to_string(size);
          rep.witness_model = named;
          return false;
        }
        return true;
      });
    }
    if (!dir.established)
      dir.note = "no finite witness up to size " + std::to_string(max_size);
    rep.directions.push_back(std::move(dir));
  }

  // Sanity: a genuine AL-monoid fails neither axiom.
  {
    IndependenceDirection dir;
    dir.name = "sanity";
    dir.model = "boolean:2";
    const ProfileReport pr = check_al_monoid(Model(make_boolean(2)));
    dir.established = pr.overall() == Verdict::Holds;
    dir.satisfied = {"ax1", "ax2", "ax3", "ax4"};
    rep.directions.push_back(std::move(dir));
  }

  return rep;
}

}  // namespace almonoid
