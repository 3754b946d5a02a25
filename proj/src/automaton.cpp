#include "tspec/automaton.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tspec {

std::vector<std::string> Automaton::input_names() const {
  return {actions.begin(), actions.begin() + num_inputs};
}

std::vector<std::string> Automaton::output_names() const {
  return {actions.begin() + num_inputs, actions.end()};
}

std::optional<int> Automaton::action_id(const std::string& name) const {
  for (int i = 0; i < num_actions(); ++i)
    if (actions[i] == name) return i;
  return std::nullopt;
}

std::optional<int> Automaton::clock_id(const std::string& name) const {
  for (int i = 0; i < num_clocks(); ++i)
    if (clocks[i] == name) return i;
  return std::nullopt;
}

std::optional<int> Automaton::location_id(const std::string& name) const {
  for (int i = 0; i < num_locations(); ++i)
    if (locations[i] == name) return i;
  return std::nullopt;
}

std::vector<int> Automaton::transitions_from(int loc, int action) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(transitions.size()); ++i)
    if (transitions[i].from == loc && transitions[i].action == action) out.push_back(i);
  return out;
}

int Automaton::max_constant() const {
  int k = 0;
  for (const auto& c : invariants) k = std::max(k, c.max_constant());
  for (const auto& c : co_invariants) k = std::max(k, c.max_constant());
  for (const auto& t : transitions) k = std::max(k, t.guard.max_constant());
  return k;
}

namespace {

bool constraint_has_strict(const Constraint& c, bool neg) {
  using K = Constraint::Kind;
  switch (c.kind()) {
    case K::True:
    case K::False: return false;
    case K::Atom: {
      CmpOp op = c.atom_value().op;
      if (op == CmpOp::Eq) return neg;
      bool strict = (op == CmpOp::Lt || op == CmpOp::Gt);
      return neg ? !strict : strict;
    }
    case K::Not: return constraint_has_strict(c.child(0), !neg);
    case K::And:
    case K::Or:
      return constraint_has_strict(c.child(0), neg) || constraint_has_strict(c.child(1), neg);
  }
  return false;
}

}  // namespace

bool Automaton::has_strict_constraints() const {
  for (const auto& c : invariants)
    if (constraint_has_strict(c, false)) return true;
  for (const auto& c : co_invariants)
    if (constraint_has_strict(c, false)) return true;
  for (const auto& t : transitions)
    if (constraint_has_strict(t.guard, false)) return true;
  return false;
}

RegionCache::RegionCache(const Automaton& a) : a_(a) {
  int n = a.num_clocks();
  regions_.reserve(a.num_locations());
  for (int l = 0; l < a.num_locations(); ++l) {
    LocationRegions r;
    ZoneList inv = normalize(a.invariants[l], n);
    ZoneList coinv = normalize(a.co_invariants[l], n);
    ZoneList not_coinv = normalize(Constraint::negate(a.co_invariants[l]), n);
    ZoneList not_inv = normalize(Constraint::negate(a.invariants[l]), n);
    r.alive = zl_intersect(inv, coinv);
    r.entry_err = zl_intersect(inv, not_coinv);
    r.entry_magic = not_inv;
    r.shadow = zl_future(r.entry_err);
    r.top = zl_subtract(zl_subtract(zones_all(n), r.alive, n), r.shadow, n);
    regions_.push_back(std::move(r));
  }
  guards_.reserve(a.transitions.size());
  for (const auto& t : a.transitions) guards_.push_back(normalize(t.guard, n));
}

std::vector<std::string> validate(const Automaton& a) {
  std::vector<std::string> issues;
  auto complain = [&](const std::string& m) { issues.push_back(m); };

  std::set<std::string> seen;
  for (const auto& c : a.clocks)
    if (!seen.insert("c:" + c).second) complain("duplicate clock '" + c + "'");
  for (int i = 0; i < a.num_actions(); ++i) {
    if (!seen.insert("a:" + a.actions[i]).second)
      complain("alphabet overlap: action '" + a.actions[i] + "' declared more than once");
  }
  seen.clear();
  for (const auto& l : a.locations)
    if (!seen.insert(l).second) complain("duplicate location '" + l + "'");

  if (a.initial < 0 || a.initial >= a.num_locations()) complain("unknown initial location");
  if (static_cast<int>(a.invariants.size()) != a.num_locations() ||
      static_cast<int>(a.co_invariants.size()) != a.num_locations())
    complain("invariant table size mismatch");

  auto check_constraint = [&](const Constraint& c, const std::string& where) {
    std::vector<ClockId> used;
    c.collect_clocks(used);
    for (ClockId x : used)
      if (x < 0 || x >= a.num_clocks()) complain("undeclared clock in " + where);
    struct Walk {
      static bool natural(const Constraint& c) {
        using K = Constraint::Kind;
        switch (c.kind()) {
          case K::True:
          case K::False: return true;
          case K::Atom: return c.atom_value().constant >= 0;
          case K::Not: return natural(c.child(0));
          case K::And:
          case K::Or: return natural(c.child(0)) && natural(c.child(1));
        }
        return true;
      }
    };
    if (!Walk::natural(c)) complain("non-natural constant in " + where);
  };

  int n = a.num_clocks();
  auto downward_closed = [&](const Constraint& c) {
    ZoneList zl = normalize(c, n);
    ZoneList down;
    for (const auto& z : zl)
      if (!z.empty()) down.push_back(z.down_pointwise());
    return zl_subset(down, zl, n);
  };

  for (int l = 0; l < std::min<int>(a.num_locations(), a.invariants.size()); ++l) {
    check_constraint(a.invariants[l], "invariant of " + a.locations[l]);
    check_constraint(a.co_invariants[l], "co-invariant of " + a.locations[l]);
    if (!downward_closed(a.invariants[l]))
      complain("invariant of '" + a.locations[l] + "' is not downward-closed");
    if (!downward_closed(a.co_invariants[l]))
      complain("co-invariant of '" + a.locations[l] + "' is not downward-closed");
  }

  for (const auto& t : a.transitions) {
    if (t.from < 0 || t.from >= a.num_locations() || t.to < 0 || t.to >= a.num_locations())
      complain("transition references unknown location");
    if (t.action < 0 || t.action >= a.num_actions()) complain("transition references unknown action");
    check_constraint(t.guard, "guard");
    for (ClockId c : t.resets)
      if (c < 0 || c >= a.num_clocks()) complain("reset of undeclared clock");
  }
  return issues;
}

std::optional<Valuation> zone_sample(const Dbm& z) {
  if (z.empty()) return std::nullopt;
  int n = z.clocks();
  Valuation v(n);
  std::vector<bool> fixed(n + 1, false);
  fixed[0] = true;
  auto val_of = [&](int i) { return i == 0 ? Rational(0) : v[i - 1]; };
  for (int i = 1; i <= n; ++i) {
    Rational lo(0), hi(0);
    bool lo_strict = false, hi_strict = false, hi_set = false;
    for (int j = 0; j <= n; ++j) {
      if (!fixed[j]) continue;
      const DbmBound& up = z.at(i, j);  // v_i - v_j <= up
      if (!up.inf) {
        Rational cand = val_of(j) + Rational(up.value);
        if (!hi_set || cand < hi || (cand == hi && up.strict)) {
          hi = cand;
          hi_strict = up.strict;
          hi_set = true;
        }
      }
      const DbmBound& dn = z.at(j, i);  // v_j - v_i <= dn  =>  v_i >= v_j - dn
      if (!dn.inf) {
        Rational cand = val_of(j) - Rational(dn.value);
        if (cand > lo || (cand == lo && dn.strict)) {
          lo = cand;
          lo_strict = dn.strict;
        }
      }
    }
    Rational pick;
    if (!hi_set) {
      pick = lo_strict ? lo + Rational(1) : lo;
    } else if (lo == hi) {
      pick = lo;  // canonical consistency: a pinched interval is non-strict
    } else {
      // prefer an integer point, fall back to the midpoint
      long long c = lo.numerator() / lo.denominator();
      while (Rational(c) < lo || (lo_strict && Rational(c) == lo)) ++c;
      Rational ip(c);
      if (ip < hi || (!hi_strict && ip == hi)) pick = ip;
      else pick = (lo + hi) / Rational(2);
    }
    v[i - 1] = pick;
    fixed[i] = true;
  }
  return z.contains(v) ? std::optional<Valuation>(v) : std::nullopt;
}

std::optional<NondeterminismWitness> nondeterminism_witness(const Automaton& a) {
  RegionCache cache(a);
  for (int l = 0; l < a.num_locations(); ++l) {
    for (int act = 0; act < a.num_actions(); ++act) {
      auto ts = a.transitions_from(l, act);
      for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j) {
          ZoneList overlap = zl_intersect(cache.guard_zones(ts[i]), cache.guard_zones(ts[j]));
          overlap = zl_intersect(overlap, cache.regions(l).alive);
          for (const auto& z : overlap) {
            if (z.empty()) continue;
            auto pt = zone_sample(z);
            if (pt) return NondeterminismWitness{l, act, *pt};
          }
        }
    }
  }
  return std::nullopt;
}

}  // namespace tspec
