#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tspec/rational.hpp"

namespace tspec {

using ClockId = int;

enum class CmpOp { Le, Lt, Eq, Ge, Gt };

std::string cmp_to_string(CmpOp op);

// Atomic constraint `x op c` or `x - y op c`, with a natural constant.
struct Atom {
  ClockId lhs = 0;
  int rhs = -1;  // -1: single-clock atom, otherwise x - y
  CmpOp op = CmpOp::Le;
  int constant = 0;
};

// Boolean combination of atoms over a clock set. Immutable, shared subtrees.
class Constraint {
 public:
  enum class Kind { True, False, Atom, Not, And, Or };

  static Constraint truth();
  static Constraint falsity();
  static Constraint atom(Atom a);
  static Constraint negate(Constraint c);
  static Constraint conj(Constraint a, Constraint b);
  static Constraint disj(Constraint a, Constraint b);

  Kind kind() const { return node_->kind; }
  const Atom& atom_value() const { return node_->atom; }
  Constraint child(int i) const;

  bool is_true() const { return node_->kind == Kind::True; }
  bool is_false() const { return node_->kind == Kind::False; }

  // Largest constant mentioned; 0 for constant-free formulas.
  int max_constant() const;
  // Collects referenced clock ids.
  void collect_clocks(std::vector<ClockId>& out) const;
  bool mentions_diagonal() const;

  Constraint rename_clocks(const std::vector<ClockId>& map) const;

 private:
  struct Node {
    Kind kind;
    Atom atom;
    std::shared_ptr<const Node> a, b;
  };
  explicit Constraint(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend class ConstraintWalker;
};

// Total map from clocks to non-negative time values.
struct Valuation {
  std::vector<Rational> values;

  explicit Valuation(int clocks = 0) : values(clocks, Rational(0)) {}
  int size() const { return static_cast<int>(values.size()); }
  Rational& operator[](int i) { return values[i]; }
  const Rational& operator[](int i) const { return values[i]; }

  Valuation delayed(const Rational& d) const;
  Valuation reset(const std::vector<ClockId>& rs) const;
};

bool eval_atom(const Atom& a, const Valuation& t);
bool eval(const Constraint& c, const Valuation& t);

}  // namespace tspec
