#include "tspec/constraint.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tspec {

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto all_digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) return std::nullopt;
    long long dv = std::stoll(d);
    if (dv == 0) return std::nullopt;
    return Rational(std::stoll(n), dv);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || !all_digits(fp) || fp.size() > 12) return std::nullopt;
    long long den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    return Rational(std::stoll(ip) * den + std::stoll(fp), den);
  }
  if (!all_digits(text)) return std::nullopt;
  return Rational(std::stoll(text));
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  long long den = r.denominator();
  long long d = den;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  if (d == 1) {
    long long target = 1;
    int digits = 0;
    while (target % den != 0) {
      target *= 10;
      ++digits;
    }
    long long num = r.numerator() * (target / den);
    std::string whole = std::to_string(num / target);
    std::string frac = std::to_string(num % target);
    while (static_cast<int>(frac.size()) < digits) frac = "0" + frac;
    return whole + "." + frac;
  }
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string cmp_to_string(CmpOp op) {
  switch (op) {
    case CmpOp::Le: return "<=";
    case CmpOp::Lt: return "<";
    case CmpOp::Eq: return "==";
    case CmpOp::Ge: return ">=";
    case CmpOp::Gt: return ">";
  }
  return "?";
}

Constraint Constraint::truth() {
  return Constraint(std::make_shared<Node>(Node{Kind::True, {}, nullptr, nullptr}));
}
Constraint Constraint::falsity() {
  return Constraint(std::make_shared<Node>(Node{Kind::False, {}, nullptr, nullptr}));
}
Constraint Constraint::atom(Atom a) {
  return Constraint(std::make_shared<Node>(Node{Kind::Atom, a, nullptr, nullptr}));
}
Constraint Constraint::negate(Constraint c) {
  if (c.is_true()) return falsity();
  if (c.is_false()) return truth();
  return Constraint(std::make_shared<Node>(Node{Kind::Not, {}, c.node_, nullptr}));
}
Constraint Constraint::conj(Constraint a, Constraint b) {
  if (a.is_true()) return b;
  if (b.is_true()) return a;
  if (a.is_false() || b.is_false()) return falsity();
  return Constraint(std::make_shared<Node>(Node{Kind::And, {}, a.node_, b.node_}));
}
Constraint Constraint::disj(Constraint a, Constraint b) {
  if (a.is_false()) return b;
  if (b.is_false()) return a;
  if (a.is_true() || b.is_true()) return truth();
  return Constraint(std::make_shared<Node>(Node{Kind::Or, {}, a.node_, b.node_}));
}

Constraint Constraint::child(int i) const {
  return Constraint(i == 0 ? node_->a : node_->b);
}

int Constraint::max_constant() const {
  switch (node_->kind) {
    case Kind::True:
    case Kind::False: return 0;
    case Kind::Atom: return std::abs(node_->atom.constant);
    case Kind::Not: return Constraint(node_->a).max_constant();
    case Kind::And:
    case Kind::Or:
      return std::max(Constraint(node_->a).max_constant(), Constraint(node_->b).max_constant());
  }
  return 0;
}

void Constraint::collect_clocks(std::vector<ClockId>& out) const {
  switch (node_->kind) {
    case Kind::True:
    case Kind::False: return;
    case Kind::Atom:
      out.push_back(node_->atom.lhs);
      if (node_->atom.rhs >= 0) out.push_back(node_->atom.rhs);
      return;
    case Kind::Not: Constraint(node_->a).collect_clocks(out); return;
    case Kind::And:
    case Kind::Or:
      Constraint(node_->a).collect_clocks(out);
      Constraint(node_->b).collect_clocks(out);
      return;
  }
}

bool Constraint::mentions_diagonal() const {
  switch (node_->kind) {
    case Kind::True:
    case Kind::False: return false;
    case Kind::Atom: return node_->atom.rhs >= 0;
    case Kind::Not: return Constraint(node_->a).mentions_diagonal();
    case Kind::And:
    case Kind::Or:
      return Constraint(node_->a).mentions_diagonal() || Constraint(node_->b).mentions_diagonal();
  }
  return false;
}

Constraint Constraint::rename_clocks(const std::vector<ClockId>& map) const {
  switch (node_->kind) {
    case Kind::True: return truth();
    case Kind::False: return falsity();
    case Kind::Atom: {
      Atom a = node_->atom;
      a.lhs = map[a.lhs];
      if (a.rhs >= 0) a.rhs = map[a.rhs];
      return atom(a);
    }
    case Kind::Not: return negate(Constraint(node_->a).rename_clocks(map));
    case Kind::And:
      return conj(Constraint(node_->a).rename_clocks(map), Constraint(node_->b).rename_clocks(map));
    case Kind::Or:
      return disj(Constraint(node_->a).rename_clocks(map), Constraint(node_->b).rename_clocks(map));
  }
  return truth();
}

Valuation Valuation::delayed(const Rational& d) const {
  Valuation r = *this;
  for (auto& v : r.values) v += d;
  return r;
}

Valuation Valuation::reset(const std::vector<ClockId>& rs) const {
  Valuation r = *this;
  for (ClockId c : rs) r.values[c] = Rational(0);
  return r;
}

bool eval_atom(const Atom& a, const Valuation& t) {
  Rational v = t[a.lhs];
  if (a.rhs >= 0) v -= t[a.rhs];
  Rational c(a.constant);
  switch (a.op) {
    case CmpOp::Le: return v <= c;
    case CmpOp::Lt: return v < c;
    case CmpOp::Eq: return v == c;
    case CmpOp::Ge: return v >= c;
    case CmpOp::Gt: return v > c;
  }
  return false;
}

bool eval(const Constraint& c, const Valuation& t) {
  switch (c.kind()) {
    case Constraint::Kind::True: return true;
    case Constraint::Kind::False: return false;
    case Constraint::Kind::Atom: return eval_atom(c.atom_value(), t);
    case Constraint::Kind::Not: return !eval(c.child(0), t);
    case Constraint::Kind::And: return eval(c.child(0), t) && eval(c.child(1), t);
    case Constraint::Kind::Or: return eval(c.child(0), t) || eval(c.child(1), t);
  }
  return false;
}

}  // namespace tspec
