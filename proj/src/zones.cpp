#include "tspec/zones.hpp"

namespace tspec {

ZoneList zones_none() { return {}; }

ZoneList zones_all(int clocks) { return {Dbm::unconstrained(clocks)}; }

namespace {

void push_nonempty(ZoneList& out, Dbm z) {
  if (z.empty()) return;
  for (const auto& e : out)
    if (e.includes(z)) return;  // cheap subsumption filter
  out.push_back(std::move(z));
}

Atom negate_atom(const Atom& a) {
  Atom r = a;
  switch (a.op) {
    case CmpOp::Le: r.op = CmpOp::Gt; return r;
    case CmpOp::Lt: r.op = CmpOp::Ge; return r;
    case CmpOp::Ge: r.op = CmpOp::Lt; return r;
    case CmpOp::Gt: r.op = CmpOp::Le; return r;
    case CmpOp::Eq: break;  // handled by caller: split into < and >
  }
  return r;
}

// Normalizes with an explicit polarity to push negations to the atoms.
ZoneList normalize_rec(const Constraint& c, int clocks, bool neg) {
  using K = Constraint::Kind;
  switch (c.kind()) {
    case K::True: return neg ? zones_none() : zones_all(clocks);
    case K::False: return neg ? zones_all(clocks) : zones_none();
    case K::Atom: {
      const Atom& a = c.atom_value();
      ZoneList out;
      if (!neg) {
        push_nonempty(out, Dbm::unconstrained(clocks).constrained(a));
      } else if (a.op == CmpOp::Eq) {
        Atom lt = a, gt = a;
        lt.op = CmpOp::Lt;
        gt.op = CmpOp::Gt;
        push_nonempty(out, Dbm::unconstrained(clocks).constrained(lt));
        push_nonempty(out, Dbm::unconstrained(clocks).constrained(gt));
      } else {
        push_nonempty(out, Dbm::unconstrained(clocks).constrained(negate_atom(a)));
      }
      return out;
    }
    case K::Not: return normalize_rec(c.child(0), clocks, !neg);
    case K::And:
    case K::Or: {
      bool conj = (c.kind() == K::And) != neg;  // De Morgan
      ZoneList l = normalize_rec(c.child(0), clocks, neg);
      ZoneList r = normalize_rec(c.child(1), clocks, neg);
      if (conj) return zl_intersect(l, r);
      return zl_union(std::move(l), r);
    }
  }
  return zones_none();
}

}  // namespace

ZoneList normalize(const Constraint& c, int clocks) { return normalize_rec(c, clocks, false); }

ZoneList zl_intersect(const ZoneList& a, const ZoneList& b) {
  ZoneList out;
  for (const auto& za : a)
    for (const auto& zb : b) push_nonempty(out, za.intersect(zb));
  return out;
}

ZoneList zl_intersect_zone(const ZoneList& a, const Dbm& z) {
  ZoneList out;
  for (const auto& za : a) push_nonempty(out, za.intersect(z));
  return out;
}

ZoneList zl_union(ZoneList a, const ZoneList& b) {
  for (const auto& zb : b) push_nonempty(a, zb);
  return a;
}

ZoneList zl_complement(const ZoneList& a, int clocks) {
  ZoneList acc = zones_all(clocks);
  for (const auto& z : a) {
    if (z.empty()) continue;
    // complement of one zone: union of its negated facets
    ZoneList negz;
    for (const Atom& atom : z.minimal_atoms()) {
      if (atom.op == CmpOp::Eq) {
        Atom lt = atom, gt = atom;
        lt.op = CmpOp::Lt;
        gt.op = CmpOp::Gt;
        push_nonempty(negz, Dbm::unconstrained(clocks).constrained(lt));
        push_nonempty(negz, Dbm::unconstrained(clocks).constrained(gt));
      } else {
        push_nonempty(negz, Dbm::unconstrained(clocks).constrained(negate_atom(atom)));
      }
    }
    acc = zl_intersect(acc, negz);
    if (acc.empty()) return acc;
  }
  return acc;
}

ZoneList zl_subtract(const ZoneList& a, const ZoneList& b, int clocks) {
  if (a.empty()) return {};
  if (b.empty()) return a;
  return zl_intersect(a, zl_complement(b, clocks));
}

ZoneList zl_future(const ZoneList& a) {
  ZoneList out;
  for (const auto& z : a) push_nonempty(out, z.future());
  return out;
}

ZoneList zl_reset(const ZoneList& a, const std::vector<ClockId>& rs) {
  ZoneList out;
  for (const auto& z : a) push_nonempty(out, z.reset(rs));
  return out;
}

ZoneList zl_pre_reset(const ZoneList& a, const std::vector<ClockId>& rs) {
  if (rs.empty()) return a;
  ZoneList out;
  for (const auto& z : a) {
    // pin reset clocks to zero inside the target, then release them
    Dbm pinned = z;
    for (ClockId c : rs) {
      Atom eq;
      eq.lhs = c;
      eq.rhs = -1;
      eq.op = CmpOp::Eq;
      eq.constant = 0;
      pinned = pinned.constrained(eq);
    }
    push_nonempty(out, pinned.freed(rs));
  }
  return out;
}

bool zl_empty(const ZoneList& a) {
  for (const auto& z : a)
    if (!z.empty()) return false;
  return true;
}

bool zl_contains(const ZoneList& a, const Valuation& t) {
  for (const auto& z : a)
    if (z.contains(t)) return true;
  return false;
}

bool zl_subset(const ZoneList& a, const ZoneList& b, int clocks) {
  for (const auto& za : a) {
    if (za.empty()) continue;
    ZoneList residue{za};
    for (const auto& zb : b) {
      ZoneList next;
      ZoneList comp = zl_complement({zb}, clocks);
      for (const auto& piece : residue)
        for (const auto& c : comp) push_nonempty(next, piece.intersect(c));
      residue = std::move(next);
      if (residue.empty()) break;
    }
    if (!residue.empty()) return false;
  }
  return true;
}

bool zl_equal(const ZoneList& a, const ZoneList& b, int clocks) {
  return zl_subset(a, b, clocks) && zl_subset(b, a, clocks);
}

int zl_max_constant(const ZoneList& a) {
  int k = 0;
  for (const auto& z : a) k = std::max(k, z.max_constant());
  return k;
}

Constraint zl_to_constraint(const ZoneList& a) {
  if (zl_empty(a)) return Constraint::falsity();
  Constraint out = Constraint::falsity();
  bool unconstrained_seen = false;
  for (const auto& z : a) {
    if (z.empty()) continue;
    auto atoms = z.minimal_atoms();
    if (atoms.empty()) unconstrained_seen = true;
    Constraint conj = Constraint::truth();
    for (const auto& atom : atoms) conj = Constraint::conj(conj, Constraint::atom(atom));
    out = Constraint::disj(out, conj);
  }
  if (unconstrained_seen) return Constraint::truth();
  return out;
}

}  // namespace tspec
