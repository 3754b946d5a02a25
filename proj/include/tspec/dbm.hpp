#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tspec/constraint.hpp"

namespace tspec {

// Bound on a clock difference: (value, strict) meaning "< value" or "<= value".
struct DbmBound {
  int value = 0;
  bool strict = false;
  bool inf = false;

  static DbmBound infinity() { return DbmBound{0, false, true}; }
  static DbmBound le(int v) { return DbmBound{v, false, false}; }
  static DbmBound lt(int v) { return DbmBound{v, true, false}; }

  bool operator==(const DbmBound& o) const {
    if (inf || o.inf) return inf == o.inf;
    return value == o.value && strict == o.strict;
  }
};

bool bound_less(const DbmBound& a, const DbmBound& b);  // a tighter than b
DbmBound bound_add(const DbmBound& a, const DbmBound& b);
inline DbmBound bound_min(const DbmBound& a, const DbmBound& b) { return bound_less(a, b) ? a : b; }

// Difference-bound matrix over n clocks plus the zero reference clock.
// Entry (i, j) bounds x_i - x_j; index 0 is the reference. Kept in
// shortest-path canonical form by all mutating operations.
class Dbm {
 public:
  explicit Dbm(int clocks = 0);

  static Dbm unconstrained(int clocks);  // all clocks >= 0
  static Dbm point_zero(int clocks);     // every clock exactly 0

  int clocks() const { return n_; }
  bool empty() const { return empty_; }

  const DbmBound& at(int i, int j) const { return m_[idx(i, j)]; }

  // All of these canonicalize before returning.
  Dbm constrained(const Atom& a) const;
  Dbm constrained_bound(int i, int j, DbmBound b) const;
  Dbm intersect(const Dbm& other) const;
  Dbm future() const;                          // delay successors, lower bounds kept
  Dbm reset(const std::vector<ClockId>& rs) const;
  Dbm freed(const std::vector<ClockId>& xs) const;  // drop all bounds on xs (keep >= 0)
  Dbm down_pointwise() const;                  // {t' : 0 <= t' <= t for some t in zone}
  Dbm extrapolated(int k) const;               // classic max-constant normalization

  bool contains(const Valuation& t) const;
  bool includes(const Dbm& other) const;  // superset, both canonical
  bool same_as(const Dbm& other) const;

  // Minimal set of atoms describing the zone (canonical form assumed).
  std::vector<Atom> minimal_atoms() const;

  int max_constant() const;
  size_t hash() const;
  std::string debug_string(const std::vector<std::string>& clock_names) const;

 private:
  int idx(int i, int j) const { return i * (n_ + 1) + j; }
  void close();

  int n_;
  bool empty_ = false;
  std::vector<DbmBound> m_;
};

}  // namespace tspec
