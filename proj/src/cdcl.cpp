// Copyright 2026 The swapsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "swapsat/errors.hpp"
#include "swapsat/sat.hpp"

namespace swapsat {

namespace {

// Internal literal: 2 * var + sign, var 0-based, sign 1 for negative.
using ILit = std::uint32_t;
using CRef = std::uint32_t;
constexpr CRef kNoReason = UINT32_MAX;

inline ILit to_ilit(Lit l) {
  return static_cast<ILit>(2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0));
}
inline ILit neg(ILit p) { return p ^ 1u; }
inline std::uint32_t var_of(ILit p) { return p >> 1; }
inline bool sign_of(ILit p) { return p & 1u; }

enum : std::int8_t { kFalse = -1, kUndef = 0, kTrue = 1 };

// Clause arena: [size, flags, activity-bits, lits...].
class Arena {
 public:
  static constexpr std::uint32_t kLearnt = 1, kDeleted = 2;

  CRef alloc(const std::vector<ILit>& lits, bool learnt) {
    const CRef cr = static_cast<CRef>(mem_.size());
    mem_.push_back(static_cast<std::uint32_t>(lits.size()));
    mem_.push_back(learnt ? kLearnt : 0);
    mem_.push_back(0);
    mem_.insert(mem_.end(), lits.begin(), lits.end());
    return cr;
  }
  std::uint32_t size(CRef c) const { return mem_[c]; }
  ILit* lits(CRef c) { return mem_.data() + c + 3; }
  bool learnt(CRef c) const { return mem_[c + 1] & kLearnt; }
  bool deleted(CRef c) const { return mem_[c + 1] & kDeleted; }
  void mark_deleted(CRef c) {
    mem_[c + 1] |= kDeleted;
    wasted_ += 3 + mem_[c];
  }
  float activity(CRef c) const {
    float f;
    std::memcpy(&f, &mem_[c + 2], sizeof f);
    return f;
  }
  void set_activity(CRef c, float f) { std::memcpy(&mem_[c + 2], &f, sizeof f); }
  std::size_t used() const { return mem_.size(); }
  std::size_t wasted() const { return wasted_; }
  std::vector<std::uint32_t>& raw() { return mem_; }
  void reset_wasted() { wasted_ = 0; }

 private:
  std::vector<std::uint32_t> mem_;
  std::size_t wasted_ = 0;
};

struct Watcher {
  CRef cref;
  ILit blocker;
};

// Max-heap of variables ordered by activity.
class VarHeap {
 public:
  explicit VarHeap(const std::vector<double>& act) : act_(act) {}
  bool empty() const { return heap_.empty(); }
  bool contains(std::uint32_t v) const { return v < pos_.size() && pos_[v] >= 0; }
  void grow(std::size_t n) {
    if (pos_.size() < n) pos_.resize(n, -1);
  }
  void insert(std::uint32_t v) {
    grow(v + 1);
    if (contains(v)) return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(pos_[v]);
  }
  void increased(std::uint32_t v) {
    if (contains(v)) up(pos_[v]);
  }
  std::uint32_t pop() {
    const std::uint32_t top = heap_[0];
    heap_[0] = heap_.back();
    pos_[heap_[0]] = 0;
    pos_[top] = -1;
    heap_.pop_back();
    if (!heap_.empty()) down(0);
    return top;
  }

 private:
  bool less(std::uint32_t a, std::uint32_t b) const {
    return act_[a] > act_[b] || (act_[a] == act_[b] && a < b);
  }
  void up(int i) {
    const std::uint32_t v = heap_[i];
    while (i > 0) {
      const int parent = (i - 1) / 2;
      if (!less(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      pos_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    pos_[v] = i;
  }
  void down(int i) {
    const std::uint32_t v = heap_[i];
    const int n = static_cast<int>(heap_.size());
    for (;;) {
      int child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && less(heap_[child + 1], heap_[child])) ++child;
      if (!less(heap_[child], v)) break;
      heap_[i] = heap_[child];
      pos_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  const std::vector<double>& act_;
  std::vector<std::uint32_t> heap_;
  std::vector<int> pos_;
};

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

}  // namespace

struct CdclSolver::Impl {
  Arena arena;
  std::vector<CRef> clauses, learnts;
  std::vector<std::vector<Watcher>> watches;  // by literal made true
  std::vector<std::int8_t> assigns;
  std::vector<int> level;
  std::vector<CRef> reason;
  std::vector<bool> polarity;  // saved phase, true = negative
  std::vector<double> activity;
  VarHeap heap{activity};
  std::vector<ILit> trail;
  std::vector<std::size_t> trail_lim;
  std::size_t qhead = 0;
  std::vector<char> seen;
  std::vector<ILit> to_clear;
  std::vector<ILit> assumptions;
  std::vector<bool> model;
  SolverStats stats;
  bool ok = true;
  double var_inc = 1.0, cla_inc = 1.0;
  double max_learnts = 0;

  int num_vars() const { return static_cast<int>(assigns.size()); }
  int decision_level() const { return static_cast<int>(trail_lim.size()); }
  std::int8_t value(ILit p) const {
    const std::int8_t a = assigns[var_of(p)];
    return sign_of(p) ? static_cast<std::int8_t>(-a) : a;
  }

  void reserve(int n) {
    while (num_vars() < n) {
      const std::uint32_t v = static_cast<std::uint32_t>(num_vars());
      assigns.push_back(kUndef);
      level.push_back(0);
      reason.push_back(kNoReason);
      polarity.push_back(true);
      activity.push_back(0.0);
      seen.push_back(0);
      watches.emplace_back();
      watches.emplace_back();
      heap.insert(v);
    }
  }

  void enqueue(ILit p, CRef from) {
    const std::uint32_t v = var_of(p);
    assigns[v] = sign_of(p) ? kFalse : kTrue;
    level[v] = decision_level();
    reason[v] = from;
    trail.push_back(p);
  }

  void attach(CRef cr) {
    ILit* c = arena.lits(cr);
    watches[neg(c[0])].push_back({cr, c[1]});
    watches[neg(c[1])].push_back({cr, c[0]});
  }

  bool add_clause(std::vector<ILit> lits) {
    if (!ok) return false;
    std::sort(lits.begin(), lits.end());
    std::vector<ILit> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      const ILit p = lits[i];
      if (i > 0 && p == lits[i - 1]) continue;
      if (i > 0 && p == neg(lits[i - 1]) ) return true;  // tautology
      if (value(p) == kTrue) return true;
      if (value(p) == kFalse) continue;
      kept.push_back(p);
    }
    if (kept.empty()) return ok = false;
    if (kept.size() == 1) {
      enqueue(kept[0], kNoReason);
      return ok = (propagate() == kNoReason);
    }
    const CRef cr = arena.alloc(kept, false);
    clauses.push_back(cr);
    attach(cr);
    return true;
  }

  CRef propagate() {
    CRef confl = kNoReason;
    while (qhead < trail.size()) {
      const ILit p = trail[qhead++];
      std::vector<Watcher>& ws = watches[p];
      const ILit false_lit = neg(p);
      ++stats.propagations;
      std::size_t i = 0, j = 0;
      const std::size_t n = ws.size();
      while (i < n) {
        const ILit blocker = ws[i].blocker;
        if (value(blocker) == kTrue) {
          ws[j++] = ws[i++];
          continue;
        }
        const CRef cr = ws[i].cref;
        ILit* c = arena.lits(cr);
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        ++i;
        const ILit first = c[0];
        const Watcher w{cr, first};
        if (first != blocker && value(first) == kTrue) {
          ws[j++] = w;
          continue;
        }
        const std::uint32_t size = arena.size(cr);
        bool moved = false;
        for (std::uint32_t k = 2; k < size; ++k) {
          if (value(c[k]) != kFalse) {
            c[1] = c[k];
            c[k] = false_lit;
            watches[neg(c[1])].push_back(w);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = w;
        if (value(first) == kFalse) {
          confl = cr;
          qhead = trail.size();
          while (i < n) ws[j++] = ws[i++];
        } else {
          enqueue(first, cr);
        }
      }
      ws.resize(j);
      if (confl != kNoReason) break;
    }
    return confl;
  }

  void bump_var(std::uint32_t v) {
    if ((activity[v] += var_inc) > 1e100) {
      for (double& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
    heap.increased(v);
  }

  void bump_clause(CRef cr) {
    const float a = arena.activity(cr) + static_cast<float>(cla_inc);
    arena.set_activity(cr, a);
    if (a > 1e20f) {
      for (CRef l : learnts) arena.set_activity(l, arena.activity(l) * 1e-20f);
      cla_inc *= 1e-20;
    }
  }

  // First-UIP learning. out[0] is the asserting literal.
  void analyze(CRef confl, std::vector<ILit>& out, int& backtrack_level) {
    out.assign(1, 0);
    int pending = 0;
    ILit p = 0;
    bool have_p = false;
    std::size_t index = trail.size();
    do {
      if (arena.learnt(confl)) bump_clause(confl);
      ILit* c = arena.lits(confl);
      const std::uint32_t size = arena.size(confl);
      for (std::uint32_t k = have_p ? 1 : 0; k < size; ++k) {
        const ILit q = c[k];
        const std::uint32_t v = var_of(q);
        if (!seen[v] && level[v] > 0) {
          seen[v] = 1;
          bump_var(v);
          if (level[v] >= decision_level())
            ++pending;
          else
            out.push_back(q);
        }
      }
      while (!seen[var_of(trail[--index])]) {
      }
      p = trail[index];
      confl = reason[var_of(p)];
      seen[var_of(p)] = 0;
      have_p = true;
      --pending;
      // Reason clauses keep the implied literal at position 0.
    } while (pending > 0);
    out[0] = neg(p);

    // Drop literals implied by the rest of the clause through one reason.
    to_clear.assign(out.begin(), out.end());
    std::size_t j = 1;
    for (std::size_t i = 1; i < out.size(); ++i) {
      const CRef r = reason[var_of(out[i])];
      bool redundant = r != kNoReason;
      if (redundant) {
        ILit* c = arena.lits(r);
        for (std::uint32_t k = 1; k < arena.size(r); ++k) {
          const std::uint32_t v = var_of(c[k]);
          if (!seen[v] && level[v] > 0) {
            redundant = false;
            break;
          }
        }
      }
      if (!redundant) out[j++] = out[i];
    }
    out.resize(j);
    for (std::size_t i = 1; i < to_clear.size(); ++i) seen[var_of(to_clear[i])] = 0;

    backtrack_level = 0;
    if (out.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < out.size(); ++i)
        if (level[var_of(out[i])] > level[var_of(out[max_i])]) max_i = i;
      std::swap(out[1], out[max_i]);
      backtrack_level = level[var_of(out[1])];
    }
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t i = trail.size(); i-- > trail_lim[lvl];) {
      const std::uint32_t v = var_of(trail[i]);
      assigns[v] = kUndef;
      reason[v] = kNoReason;
      polarity[v] = sign_of(trail[i]);
      heap.insert(v);
    }
    trail.resize(trail_lim[lvl]);
    qhead = trail.size();
    trail_lim.resize(lvl);
  }

  bool locked(CRef cr) {
    const ILit first = arena.lits(cr)[0];
    return value(first) == kTrue && reason[var_of(first)] == cr;
  }

  void reduce_db() {
    std::sort(learnts.begin(), learnts.end(), [&](CRef a, CRef b) {
      const bool a_bin = arena.size(a) == 2, b_bin = arena.size(b) == 2;
      if (a_bin != b_bin) return !a_bin;
      return arena.activity(a) < arena.activity(b);
    });
    const double limit = cla_inc / static_cast<double>(std::max<std::size_t>(learnts.size(), 1));
    std::size_t j = 0;
    for (std::size_t i = 0; i < learnts.size(); ++i) {
      const CRef cr = learnts[i];
      const bool removable = arena.size(cr) > 2 && !locked(cr) &&
                             (i < learnts.size() / 2 || arena.activity(cr) < limit);
      if (removable)
        arena.mark_deleted(cr);
      else
        learnts[j++] = cr;
    }
    learnts.resize(j);
    purge_watches();
    if (arena.wasted() * 5 > arena.used()) collect_garbage();
  }

  void purge_watches() {
    for (auto& ws : watches)
      std::erase_if(ws, [&](const Watcher& w) { return arena.deleted(w.cref); });
  }

  void collect_garbage() {
    Arena fresh;
    std::vector<CRef> remap_from, remap_to;
    auto move = [&](CRef cr) {
      std::vector<ILit> lits(arena.lits(cr), arena.lits(cr) + arena.size(cr));
      const CRef nc = fresh.alloc(lits, arena.learnt(cr));
      fresh.set_activity(nc, arena.activity(cr));
      return nc;
    };
    // Old refs are increasing in both lists' union; map through a sorted table.
    std::vector<std::pair<CRef, CRef>> table;
    for (CRef& cr : clauses) {
      const CRef nc = move(cr);
      table.emplace_back(cr, nc);
      cr = nc;
    }
    for (CRef& cr : learnts) {
      const CRef nc = move(cr);
      table.emplace_back(cr, nc);
      cr = nc;
    }
    std::sort(table.begin(), table.end());
    auto lookup = [&](CRef old) {
      const auto it = std::lower_bound(table.begin(), table.end(),
                                       std::make_pair(old, CRef{0}));
      if (it == table.end() || it->first != old)
        throw InternalError("dangling clause reference during collection");
      return it->second;
    };
    for (auto& ws : watches)
      for (Watcher& w : ws) w.cref = lookup(w.cref);
    for (const ILit p : trail) {
      CRef& r = reason[var_of(p)];
      if (r != kNoReason) r = lookup(r);
    }
    arena = std::move(fresh);
  }

  ILit pick_branch() {
    while (!heap.empty()) {
      const std::uint32_t v = heap.pop();
      if (assigns[v] == kUndef) return 2 * v + (polarity[v] ? 1u : 0u);
    }
    return UINT32_MAX;
  }

  // Runs CDCL until a restart is due (Unknown), an answer or the budget ends.
  SatStatus search(std::uint64_t conflict_limit, const Budget& budget,
                   std::uint64_t& total_conflicts, bool& out_of_budget) {
    std::uint64_t conflicts = 0;
    std::vector<ILit> learnt;
    for (;;) {
      const CRef confl = propagate();
      if (confl != kNoReason) {
        ++conflicts;
        ++total_conflicts;
        ++stats.conflicts;
        if (decision_level() == 0) {
          ok = false;
          return SatStatus::Unsat;
        }
        int bt = 0;
        analyze(confl, learnt, bt);
        cancel_until(bt);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          const CRef cr = arena.alloc(learnt, true);
          learnts.push_back(cr);
          ++stats.learnt_clauses;
          attach(cr);
          bump_clause(cr);
          enqueue(learnt[0], cr);
        }
        var_inc /= 0.95;
        cla_inc /= 0.999;
        if ((budget.max_conflicts && total_conflicts >= budget.max_conflicts) ||
            ((total_conflicts & 63) == 0 && budget.expired())) {
          out_of_budget = true;
          return SatStatus::Unknown;
        }
        continue;
      }
      if (conflicts >= conflict_limit) return SatStatus::Unknown;
      if (static_cast<double>(learnts.size()) -
              static_cast<double>(trail.size()) >= max_learnts) {
        reduce_db();
        max_learnts *= 1.1;
      }
      ILit next = UINT32_MAX;
      while (decision_level() < static_cast<int>(assumptions.size())) {
        const ILit a = assumptions[decision_level()];
        if (value(a) == kTrue) {
          trail_lim.push_back(trail.size());
        } else if (value(a) == kFalse) {
          return SatStatus::Unsat;
        } else {
          next = a;
          break;
        }
      }
      if (next == UINT32_MAX) {
        next = pick_branch();
        if (next == UINT32_MAX) return SatStatus::Sat;
        ++stats.decisions;
        if ((stats.decisions & 1023) == 0 && budget.expired()) {
          out_of_budget = true;
          return SatStatus::Unknown;
        }
      }
      trail_lim.push_back(trail.size());
      enqueue(next, kNoReason);
    }
  }

  SatStatus solve(std::span<const Lit> assume, const Budget& budget) {
    model.clear();
    if (!ok) return SatStatus::Unsat;
    assumptions.clear();
    for (Lit l : assume) {
      if (l == 0 || std::abs(l) > num_vars())
        throw InvalidArgument("assumption literal " + std::to_string(l) + " out of range");
      assumptions.push_back(to_ilit(l));
    }
    max_learnts = std::max(static_cast<double>(clauses.size()) / 3.0, 1000.0);
    std::uint64_t total_conflicts = 0;
    bool out_of_budget = false;
    SatStatus status = SatStatus::Unknown;
    for (int restart = 0; status == SatStatus::Unknown && !out_of_budget; ++restart) {
      if (budget.expired()) break;
      const auto limit = static_cast<std::uint64_t>(luby(2.0, restart) * 100.0);
      status = search(limit, budget, total_conflicts, out_of_budget);
      if (status == SatStatus::Unknown) ++stats.restarts;
      if (status != SatStatus::Sat) cancel_until(0);
    }
    if (status == SatStatus::Sat) {
      model.assign(static_cast<std::size_t>(num_vars()) + 1, false);
      for (int v = 0; v < num_vars(); ++v) model[v + 1] = assigns[v] == kTrue;
      cancel_until(0);
    }
    return status;
  }
};

CdclSolver::CdclSolver() : impl_(std::make_unique<Impl>()) {}
CdclSolver::~CdclSolver() = default;

void CdclSolver::reserve_vars(int n) { impl_->reserve(n); }
int CdclSolver::num_vars() const { return impl_->num_vars(); }

bool CdclSolver::add_clause(std::span<const Lit> lits) {
  std::vector<ILit> internal;
  internal.reserve(lits.size());
  for (Lit l : lits) {
    if (l == 0) throw InvalidArgument("zero literal in clause");
    impl_->reserve(std::abs(l));
    internal.push_back(to_ilit(l));
  }
  if (impl_->decision_level() != 0) impl_->cancel_until(0);
  return impl_->add_clause(std::move(internal));
}

SatStatus CdclSolver::solve(std::span<const Lit> assumptions, const Budget& budget) {
  return impl_->solve(assumptions, budget);
}

const std::vector<bool>& CdclSolver::model() const { return impl_->model; }
const SolverStats& CdclSolver::stats() const { return impl_->stats; }

}  // namespace swapsat
