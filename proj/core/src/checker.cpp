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

#include "almonoid/checker.hpp"

#include <atomic>
#include <thread>

#include "almonoid/catalog.hpp"

namespace almonoid {

namespace {

// Truth of a relation under an assignment; Leq is the equation
// meet(l,r) = l over the derived order.
enum class RelTruth : uint8_t { True, False, OutOfWindow, NoUnity };

RelTruth relation_truth(const Model& m, const Relation& r,
                        std::span<const Elem> env) {
  const Eval l = eval_term(m, r.lhs, env);
  if (!l.is_ok())
    return l.status == EvalStatus::NoUnity ? RelTruth::NoUnity
                                           : RelTruth::OutOfWindow;
  const Eval rr = eval_term(m, r.rhs, env);
  if (!rr.is_ok())
    return rr.status == EvalStatus::NoUnity ? RelTruth::NoUnity
                                            : RelTruth::OutOfWindow;
  if (r.op == RelOp::Eq)
    return l.value == rr.value ? RelTruth::True : RelTruth::False;
  return m.leq(l.value, rr.value) ? RelTruth::True : RelTruth::False;
}

struct ChunkResult {
  uint64_t checked = 0;
  uint64_t skipped = 0;
  bool found = false;
  std::vector<Elem> witness;
  // Counts up to and including the first violation, so merged reports are
  // identical for any worker count.
};

// Scans assignments with the first variable restricted to [lo, hi).
ChunkResult scan_range(const Model& m, const Claim& c,
                       const std::vector<Elem>& domain, size_t lo, size_t hi) {
  ChunkResult res;
  const size_t k = c.vars.size();
  std::vector<Elem> env(k);
  std::vector<size_t> idx(k, 0);
  if (lo >= hi) return res;
  idx[0] = lo;
  for (size_t i = 0; i < k; ++i) env[i] = domain[idx[i]];

  const size_t dsize = domain.size();
  for (;;) {
    bool hyp_failed = false;
    bool skip = false;
    for (const auto& h : c.hypotheses) {
      switch (relation_truth(m, h, env)) {
        case RelTruth::True: break;
        case RelTruth::False: hyp_failed = true; break;
        default: skip = true; break;
      }
      if (hyp_failed || skip) break;
    }
    if (skip) {
      ++res.skipped;
    } else if (hyp_failed) {
      ++res.checked;
    } else {
      switch (relation_truth(m, c.conclusion, env)) {
        case RelTruth::True:
          ++res.checked;
          break;
        case RelTruth::False:
          ++res.checked;
          res.found = true;
          res.witness = env;
          return res;
        default:
          ++res.skipped;
          break;
      }
    }

    // Odometer: last variable fastest.
    size_t pos = k;
    while (pos > 0) {
      --pos;
      const size_t limit = pos == 0 ? hi : dsize;
      if (++idx[pos] < limit) {
        env[pos] = domain[idx[pos]];
        break;
      }
      idx[pos] = pos == 0 ? hi : 0;
      env[pos] = domain[0];
      if (pos == 0) return res;
    }
    if (k == 0) return res;
  }
}

uint64_t pow_u64(uint64_t base, size_t exp) {
  uint64_t r = 1;
  for (size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Eval eval_term(const Model& m, const Term& t, std::span<const Elem> env) {
  switch (t.kind) {
    case Term::Kind::Var:
      return Eval::ok(env[t.var]);
    case Term::Kind::Zero:
      return Eval::ok(m.zero());
    case Term::Kind::One: {
      const auto& u = m.unity();
      return u ? Eval::ok(*u) : Eval::no_unity();
    }
    case Term::Kind::Op: {
      const Eval l = eval_term(m, t.args[0], env);
      if (!l.is_ok()) return l;
      const Eval r = eval_term(m, t.args[1], env);
      if (!r.is_ok()) return r;
      return m.apply(t.op, l.value, r.value);
    }
  }
  return Eval::out_of_window();
}

Eval eval_relation(const Model& m, const Relation& r,
                   std::span<const Elem> env) {
  switch (relation_truth(m, r, env)) {
    case RelTruth::True: return Eval::ok(Elem::idx(1));
    case RelTruth::False: return Eval::ok(Elem::idx(0));
    case RelTruth::NoUnity: return Eval::no_unity();
    default: return Eval::out_of_window();
  }
}

ClaimReport check_claim(const Model& m, const Claim& c,
                        const CheckOptions& opts) {
  ClaimReport rep;
  rep.id = c.id;

  const auto& domain = m.domain();
  const uint64_t space = pow_u64(domain.size(), c.vars.size());

  if (c.uses_one() && !m.unity()) {
    rep.verdict = Verdict::Inconclusive;
    rep.skipped = space;
    rep.note = "no-unity";
    return rep;
  }

  const int jobs = opts.jobs > 1 && space >= opts.parallel_threshold &&
                           domain.size() >= 2
                       ? opts.jobs
                       : 1;

  ChunkResult merged;
  if (jobs == 1) {
    merged = scan_range(m, c, domain, 0, domain.size());
  } else {
    // Deterministic merge: per-chunk results combined in chunk order, and a
    // chunk past the first witness contributes nothing.
    const size_t chunk_count = std::min<size_t>(domain.size(), jobs * 4);
    std::vector<ChunkResult> results(chunk_count);
    std::atomic<size_t> next{0};
    std::atomic<size_t> earliest_hit{chunk_count};
    auto worker = [&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= chunk_count) return;
        if (i > earliest_hit.load()) continue;
        const size_t lo = domain.size() * i / chunk_count;
        const size_t hi = domain.size() * (i + 1) / chunk_count;
        results[i] = scan_range(m, c, domain, lo, hi);
        if (results[i].found) {
          size_t cur = earliest_hit.load();
          while (i < cur && !earliest_hit.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& r : results) {
      merged.checked += r.checked;
      merged.skipped += r.skipped;
      if (r.found) {
        merged.found = true;
        merged.witness = r.witness;
        break;
      }
    }
  }

  rep.checked = merged.checked;
  rep.skipped = merged.skipped;
  if (merged.found) {
    rep.verdict = Verdict::Fails;
    Assignment w;
    for (size_t i = 0; i < c.vars.size(); ++i)
      w.emplace_back(c.vars[i], merged.witness[i]);
    rep.witness = std::move(w);
  } else {
    rep.verdict = merged.skipped > 0 ? Verdict::Inconclusive : Verdict::Holds;
  }
  return rep;
}

std::vector<ClaimReport> run_catalog(const Model& m, const CheckOptions& opts) {
  std::vector<ClaimReport> out;
  out.reserve(catalog().size());
  for (const Claim& c : catalog()) out.push_back(check_claim(m, c, opts));
  return out;
}

std::string to_string(const Assignment& w) {
  std::string out = "{";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i].first + "=" + to_string(w[i].second);
  }
  return out + "}";
}

}  // namespace almonoid
