#include "tspec/dbm.hpp"

#include <sstream>

namespace tspec {

bool bound_less(const DbmBound& a, const DbmBound& b) {
  if (a.inf) return false;
  if (b.inf) return true;
  if (a.value != b.value) return a.value < b.value;
  return a.strict && !b.strict;
}

DbmBound bound_add(const DbmBound& a, const DbmBound& b) {
  if (a.inf || b.inf) return DbmBound::infinity();
  return DbmBound{a.value + b.value, a.strict || b.strict, false};
}

Dbm::Dbm(int clocks) : n_(clocks), m_((clocks + 1) * (clocks + 1), DbmBound::le(0)) {}

Dbm Dbm::unconstrained(int clocks) {
  Dbm d(clocks);
  for (int i = 0; i <= clocks; ++i)
    for (int j = 0; j <= clocks; ++j) {
      if (i == j) d.m_[d.idx(i, j)] = DbmBound::le(0);
      else if (i == 0) d.m_[d.idx(i, j)] = DbmBound::le(0);  // 0 - x_j <= 0
      else d.m_[d.idx(i, j)] = DbmBound::infinity();
    }
  return d;
}

Dbm Dbm::point_zero(int clocks) { return Dbm(clocks); }

void Dbm::close() {
  if (empty_) return;
  int n = n_ + 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const DbmBound& ik = m_[idx(i, k)];
      if (ik.inf) continue;
      for (int j = 0; j < n; ++j) {
        DbmBound via = bound_add(ik, m_[idx(k, j)]);
        if (bound_less(via, m_[idx(i, j)])) m_[idx(i, j)] = via;
      }
    }
  for (int i = 0; i < n; ++i) {
    const DbmBound& d = m_[idx(i, i)];
    if (!d.inf && (d.value < 0 || (d.value == 0 && d.strict))) {
      empty_ = true;
      return;
    }
  }
}

Dbm Dbm::constrained(const Atom& a) const {
  // x - y op c maps onto entries (x, y) and (y, x).
  int i = a.lhs + 1;
  int j = a.rhs >= 0 ? a.rhs + 1 : 0;
  switch (a.op) {
    case CmpOp::Le: return constrained_bound(i, j, DbmBound::le(a.constant));
    case CmpOp::Lt: return constrained_bound(i, j, DbmBound::lt(a.constant));
    case CmpOp::Ge: return constrained_bound(j, i, DbmBound::le(-a.constant));
    case CmpOp::Gt: return constrained_bound(j, i, DbmBound::lt(-a.constant));
    case CmpOp::Eq:
      return constrained_bound(i, j, DbmBound::le(a.constant))
          .constrained_bound(j, i, DbmBound::le(-a.constant));
  }
  return *this;
}

Dbm Dbm::constrained_bound(int i, int j, DbmBound b) const {
  if (empty_) return *this;
  Dbm r = *this;
  if (bound_less(b, r.m_[r.idx(i, j)])) {
    r.m_[r.idx(i, j)] = b;
    r.close();
  }
  return r;
}

Dbm Dbm::intersect(const Dbm& other) const {
  if (empty_) return *this;
  if (other.empty_) return other;
  Dbm r = *this;
  bool changed = false;
  for (size_t k = 0; k < m_.size(); ++k) {
    if (bound_less(other.m_[k], r.m_[k])) {
      r.m_[k] = other.m_[k];
      changed = true;
    }
  }
  if (changed) r.close();
  return r;
}

Dbm Dbm::future() const {
  if (empty_) return *this;
  Dbm r = *this;
  for (int i = 1; i <= n_; ++i) r.m_[r.idx(i, 0)] = DbmBound::infinity();
  // closure is preserved: no new path can tighten remaining entries
  return r;
}

Dbm Dbm::reset(const std::vector<ClockId>& rs) const {
  if (empty_ || rs.empty()) return *this;
  Dbm r = *this;
  for (ClockId c : rs) {
    int x = c + 1;
    for (int j = 0; j <= n_; ++j) {
      r.m_[r.idx(x, j)] = r.m_[r.idx(0, j)];
      r.m_[r.idx(j, x)] = r.m_[r.idx(j, 0)];
    }
    r.m_[r.idx(x, x)] = DbmBound::le(0);
  }
  r.close();
  return r;
}

Dbm Dbm::freed(const std::vector<ClockId>& xs) const {
  if (empty_ || xs.empty()) return *this;
  Dbm r = *this;
  for (ClockId c : xs) {
    int x = c + 1;
    for (int j = 0; j <= n_; ++j) {
      if (j == x) continue;
      r.m_[r.idx(x, j)] = DbmBound::infinity();
      r.m_[r.idx(j, x)] = j == 0 ? DbmBound::le(0) : DbmBound::infinity();
    }
  }
  r.close();
  return r;
}

Dbm Dbm::down_pointwise() const {
  if (empty_) return *this;
  Dbm r = *this;
  for (int i = 1; i <= n_; ++i) {
    r.m_[r.idx(0, i)] = DbmBound::le(0);
    for (int j = 1; j <= n_; ++j)
      if (i != j) r.m_[r.idx(i, j)] = DbmBound::infinity();
  }
  r.close();
  return r;
}

Dbm Dbm::extrapolated(int k) const {
  if (empty_) return *this;
  Dbm r = *this;
  bool changed = false;
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= n_; ++j) {
      if (i == j) continue;
      DbmBound& b = r.m_[r.idx(i, j)];
      if (b.inf) continue;
      if (b.value > k) {
        b = DbmBound::infinity();
        changed = true;
      } else if (b.value < -k) {
        b = DbmBound::lt(-k);
        changed = true;
      }
    }
  if (changed) r.close();
  return r;
}

bool Dbm::contains(const Valuation& t) const {
  if (empty_) return false;
  auto value = [&](int i) { return i == 0 ? Rational(0) : t[i - 1]; };
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= n_; ++j) {
      const DbmBound& b = m_[idx(i, j)];
      if (b.inf) continue;
      Rational diff = value(i) - value(j);
      Rational c(b.value);
      if (b.strict ? !(diff < c) : !(diff <= c)) return false;
    }
  return true;
}

bool Dbm::includes(const Dbm& other) const {
  if (other.empty_) return true;
  if (empty_) return false;
  for (size_t k = 0; k < m_.size(); ++k)
    if (bound_less(m_[k], other.m_[k])) return false;
  return true;
}

bool Dbm::same_as(const Dbm& other) const {
  if (empty_ || other.empty_) return empty_ == other.empty_;
  for (size_t k = 0; k < m_.size(); ++k)
    if (!(m_[k] == other.m_[k])) return false;
  return true;
}

std::vector<Atom> Dbm::minimal_atoms() const {
  std::vector<Atom> out;
  if (empty_) return out;
  int n = n_ + 1;
  auto redundant = [&](int i, int j) {
    // implied by the conjunction of some two-step path
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      DbmBound via = bound_add(m_[idx(i, k)], m_[idx(k, j)]);
      if (!bound_less(m_[idx(i, j)], via)) return true;
    }
    return false;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const DbmBound& b = m_[idx(i, j)];
      if (b.inf) continue;
      if (i == 0 && b.value == 0 && !b.strict) continue;  // x >= 0, implicit
      if (redundant(i, j)) continue;
      Atom a;
      if (i == 0) {
        // 0 - x_j (<|<=) c  =>  x_j (>|>=) -c
        a.lhs = j - 1;
        a.rhs = -1;
        a.constant = -b.value;
        a.op = b.strict ? CmpOp::Gt : CmpOp::Ge;
      } else {
        a.lhs = i - 1;
        a.rhs = j == 0 ? -1 : j - 1;
        a.constant = b.value;
        a.op = b.strict ? CmpOp::Lt : CmpOp::Le;
      }
      out.push_back(a);
    }
  return out;
}

int Dbm::max_constant() const {
  int k = 0;
  for (const auto& b : m_)
    if (!b.inf) k = std::max(k, std::abs(b.value));
  return k;
}

size_t Dbm::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&](size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  if (empty_) {
    mix(0xdead);
    return h;
  }
  for (const auto& b : m_) {
    mix(b.inf ? 0x7fffffff : static_cast<size_t>(b.value * 2 + (b.strict ? 1 : 0)) + 0x80000000u);
  }
  return h;
}

std::string Dbm::debug_string(const std::vector<std::string>& clock_names) const {
  if (empty_) return "false";
  auto atoms = minimal_atoms();
  if (atoms.empty()) return "true";
  std::ostringstream os;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (i) os << " && ";
    const Atom& a = atoms[i];
    os << clock_names[a.lhs];
    if (a.rhs >= 0) os << "-" << clock_names[a.rhs];
    os << cmp_to_string(a.op) << a.constant;
  }
  return os.str();
}

}  // namespace tspec
