#pragma once

#include <vector>

#include "tspec/dbm.hpp"

namespace tspec {

// Finite union of zones. Guards and invariants may be disjunctive, so every
// region-level computation works on zone lists; individual zones stay
// conjunctive and canonical.
using ZoneList = std::vector<Dbm>;

ZoneList zones_none();
ZoneList zones_all(int clocks);

// DNF normalization of an arbitrary boolean clock constraint.
ZoneList normalize(const Constraint& c, int clocks);

ZoneList zl_intersect(const ZoneList& a, const ZoneList& b);
ZoneList zl_intersect_zone(const ZoneList& a, const Dbm& z);
ZoneList zl_union(ZoneList a, const ZoneList& b);
ZoneList zl_complement(const ZoneList& a, int clocks);
ZoneList zl_subtract(const ZoneList& a, const ZoneList& b, int clocks);
ZoneList zl_future(const ZoneList& a);
ZoneList zl_reset(const ZoneList& a, const std::vector<ClockId>& rs);

// Points whose rs-reset lands inside `a` (pre-image of reset).
ZoneList zl_pre_reset(const ZoneList& a, const std::vector<ClockId>& rs);

bool zl_empty(const ZoneList& a);
bool zl_contains(const ZoneList& a, const Valuation& t);
bool zl_subset(const ZoneList& a, const ZoneList& b, int clocks);
bool zl_equal(const ZoneList& a, const ZoneList& b, int clocks);
int zl_max_constant(const ZoneList& a);

// Disjunction of conjunctions; parses back to the same set of valuations.
Constraint zl_to_constraint(const ZoneList& a);

}  // namespace tspec
