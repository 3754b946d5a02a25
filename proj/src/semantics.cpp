#include "tspec/semantics.hpp"

#include <algorithm>
#include <set>

namespace tspec {

SemState Semantics::initial() const {
  Valuation zero(a_.num_clocks());
  switch (classify_point(a_.initial, zero)) {
    case StateKind::Top: return SemState::top();
    case StateKind::Bot: return SemState::bot();
    case StateKind::Plain: return SemState::plain(a_.initial, Dbm::point_zero(a_.num_clocks()));
  }
  return SemState::bot();
}

StateKind Semantics::classify_point(int loc, const Valuation& t) const {
  // initial/entry classification: invariants take priority over co-invariants
  if (!eval(a_.invariants[loc], t)) return StateKind::Top;
  if (!eval(a_.co_invariants[loc], t)) return StateKind::Bot;
  return StateKind::Plain;
}

std::vector<Successor> Semantics::action_successors(const SemState& s, int action) const {
  std::vector<Successor> out;
  int n = a_.num_clocks();
  if (s.kind == StateKind::Bot) {
    out.push_back({SemState::bot(), Dbm::unconstrained(n)});
    return out;
  }
  if (s.kind == StateKind::Top) return out;  // quiescent: no action transitions

  ZoneList covered;
  for (int ti : a_.transitions_from(s.loc, action)) {
    const Transition& t = a_.transitions[ti];
    ZoneList base = zl_intersect_zone(cache_.guard_zones(ti), s.zone);
    if (zl_empty(base)) continue;
    covered = zl_union(covered, base);
    const LocationRegions& tgt = cache_.regions(t.to);
    ZoneList plain_piece = zl_intersect(base, zl_pre_reset(tgt.alive, t.resets));
    ZoneList err_piece = zl_intersect(base, zl_pre_reset(tgt.entry_err, t.resets));
    ZoneList magic_piece = zl_intersect(base, zl_pre_reset(tgt.entry_magic, t.resets));
    for (const auto& z : plain_piece) {
      Dbm target = z.reset(t.resets);
      if (!target.empty()) out.push_back({SemState::plain(t.to, target), z});
    }
    for (const auto& z : err_piece)
      if (!z.empty()) out.push_back({SemState::bot(), z});
    for (const auto& z : magic_piece)
      if (!z.empty()) out.push_back({SemState::top(), z});
  }

  // implicit completion on the uncovered part of the state zone
  ZoneList gap = zl_subtract({s.zone}, covered, n);
  for (const auto& z : gap) {
    if (z.empty()) continue;
    if (a_.is_input(action)) out.push_back({SemState::bot(), z});
    else out.push_back({SemState::top(), z});
  }
  return out;
}

std::vector<Successor> Semantics::delay_successors(const SemState& s) const {
  std::vector<Successor> out;
  int n = a_.num_clocks();
  if (s.kind == StateKind::Bot) {
    out.push_back({SemState::bot(), Dbm::unconstrained(n)});
    return out;
  }
  if (s.kind == StateKind::Top) {
    out.push_back({SemState::top(), Dbm::unconstrained(n)});
    return out;
  }
  const LocationRegions& r = cache_.regions(s.loc);
  Dbm fut = s.zone.future();
  for (const auto& z : zl_intersect_zone(r.alive, fut))
    if (!z.empty()) out.push_back({SemState::plain(s.loc, z), z});
  for (const auto& z : zl_intersect_zone(r.shadow, fut))
    if (!z.empty()) out.push_back({SemState::bot(), z});
  for (const auto& z : zl_intersect_zone(r.top, fut))
    if (!z.empty()) out.push_back({SemState::top(), z});
  return out;
}

bool Semantics::is_semi_timestop(const SemState& s) const {
  if (s.kind != StateKind::Plain) return false;
  const LocationRegions& r = cache_.regions(s.loc);
  Dbm fut = s.zone.future();

  // clause 2: some delay is disabled or leads to the timestop
  if (zl_empty(zl_intersect_zone(r.top, fut))) return false;

  // clause 1: every enabled output in the delay closure is a magic action
  ZoneList closure = zl_intersect_zone(r.alive, fut);
  for (int ti = 0; ti < static_cast<int>(a_.transitions.size()); ++ti) {
    const Transition& t = a_.transitions[ti];
    if (t.from != s.loc || a_.is_input(t.action)) continue;
    ZoneList enabled = zl_intersect(closure, cache_.guard_zones(ti));
    if (zl_empty(enabled)) continue;
    const LocationRegions& tgt = cache_.regions(t.to);
    ZoneList non_magic = zl_union(zl_pre_reset(tgt.alive, t.resets),
                                  zl_pre_reset(tgt.entry_err, t.resets));
    if (!zl_empty(zl_intersect(enabled, non_magic))) return false;
  }
  return true;
}

PointState PointSimulator::initial() const {
  Valuation zero(a_.num_clocks());
  if (!eval(a_.invariants[a_.initial], zero)) return PointState::top();
  if (!eval(a_.co_invariants[a_.initial], zero)) return PointState::bot();
  return PointState{StateKind::Plain, a_.initial, zero};
}

bool PointSimulator::alive(int loc, const Valuation& t) const {
  return eval(a_.invariants[loc], t) && eval(a_.co_invariants[loc], t);
}

std::vector<PointState> PointSimulator::action_step(const PointState& s, int action) const {
  std::vector<PointState> out;
  if (s.kind == StateKind::Bot) {
    out.push_back(PointState::bot());
    return out;
  }
  if (s.kind == StateKind::Top) return out;

  bool any = false;
  for (int ti : a_.transitions_from(s.loc, action)) {
    const Transition& t = a_.transitions[ti];
    if (!eval(t.guard, s.val)) continue;
    any = true;
    Valuation after = s.val.reset(t.resets);
    if (!eval(a_.invariants[t.to], after)) out.push_back(PointState::top());
    else if (!eval(a_.co_invariants[t.to], after)) out.push_back(PointState::bot());
    else out.push_back(PointState{StateKind::Plain, t.to, after});
  }
  if (!any) out.push_back(a_.is_input(action) ? PointState::bot() : PointState::top());
  return out;
}

bool PointSimulator::timeout_moment_within(int loc, const Valuation& t, const Rational& d) const {
  // Looks for a moment in (0, d] where the invariant holds but the
  // co-invariant fails. Constraint truth only changes at finitely many
  // breakpoints of single-clock atoms, so testing breakpoints and interval
  // midpoints is exact.
  std::set<Rational> crit;
  crit.insert(d);
  std::vector<std::pair<ClockId, int>> single;  // (clock, constant)
  auto collect = [&](const Constraint& c, auto&& self) -> void {
    using K = Constraint::Kind;
    switch (c.kind()) {
      case K::Atom:
        if (c.atom_value().rhs < 0) single.push_back({c.atom_value().lhs, c.atom_value().constant});
        return;
      case K::Not: self(c.child(0), self); return;
      case K::And:
      case K::Or:
        self(c.child(0), self);
        self(c.child(1), self);
        return;
      default: return;
    }
  };
  collect(a_.invariants[loc], collect);
  collect(a_.co_invariants[loc], collect);
  for (auto& [x, c] : single) {
    Rational delta = Rational(c) - t[x];
    if (delta > Rational(0) && delta <= d) crit.insert(delta);
  }
  std::vector<Rational> points(crit.begin(), crit.end());
  std::vector<Rational> probes = points;
  Rational prev(0);
  for (const auto& p : points) {
    probes.push_back((prev + p) / Rational(2));
    prev = p;
  }
  for (const auto& delta : probes) {
    if (delta <= Rational(0) || delta > d) continue;
    Valuation at = t.delayed(delta);
    if (eval(a_.invariants[loc], at) && !eval(a_.co_invariants[loc], at)) return true;
  }
  return false;
}

PointState PointSimulator::delay_step(const PointState& s, const Rational& d) const {
  if (s.kind == StateKind::Bot) return PointState::bot();
  if (s.kind == StateKind::Top) return PointState::top();
  Valuation after = s.val.delayed(d);
  if (alive(s.loc, after)) return PointState{StateKind::Plain, s.loc, after};
  // a timeout moment inside (0, d] makes the whole delay an error; the final
  // valuation is then outside the co-invariant as well since co-invariants are
  // downward-closed (and synthesized shadows are future-closed)
  if (timeout_moment_within(s.loc, s.val, d)) return PointState::bot();
  return PointState::top();
}

}  // namespace tspec
