#pragma once

#include <optional>

#include "tspec/automaton.hpp"

namespace tspec {

enum class StateKind { Plain, Bot, Top };

// Symbolic state of the transition-system semantics: the chaotic error state,
// the quiescent timestop state, or a location with a non-empty zone of alive
// valuations.
struct SemState {
  StateKind kind = StateKind::Bot;
  int loc = -1;
  Dbm zone{0};

  static SemState bot() { return SemState{StateKind::Bot, -1, Dbm(0)}; }
  static SemState top() { return SemState{StateKind::Top, -1, Dbm(0)}; }
  static SemState plain(int loc, Dbm z) { return SemState{StateKind::Plain, loc, std::move(z)}; }
};

struct Successor {
  SemState state;
  Dbm piece;  // source-side region where this successor applies
};

// Zone-level semantics of one automaton. The completed view is implicit:
// disabled inputs lead to the error state, disabled outputs and delays to the
// timestop state.
class Semantics {
 public:
  explicit Semantics(const Automaton& a) : a_(a), cache_(a) {}

  const Automaton& automaton() const { return a_; }
  const RegionCache& regions() const { return cache_; }

  SemState initial() const;

  // Action successors with their guard pieces; covers the state's zone.
  std::vector<Successor> action_successors(const SemState& s, int action) const;

  // Delay partition over future(zone): plain, error and timestop pieces.
  std::vector<Successor> delay_successors(const SemState& s) const;

  // A plain state where the component cannot dodge the timestop on its own:
  // every enabled output from the delay closure is magic and some delay is
  // disabled.
  bool is_semi_timestop(const SemState& s) const;

  StateKind classify_point(int loc, const Valuation& t) const;

 private:
  const Automaton& a_;
  RegionCache cache_;
};

// Exact-point interpreter of the same semantics; used by the digitizer, the
// witness replayer and as a cross-check against the zone layer.
struct PointState {
  StateKind kind = StateKind::Bot;
  int loc = -1;
  Valuation val;

  static PointState bot() { return PointState{StateKind::Bot, -1, Valuation(0)}; }
  static PointState top() { return PointState{StateKind::Top, -1, Valuation(0)}; }
};

class PointSimulator {
 public:
  explicit PointSimulator(const Automaton& a) : a_(a) {}

  PointState initial() const;
  std::vector<PointState> action_step(const PointState& s, int action) const;
  PointState delay_step(const PointState& s, const Rational& d) const;

 private:
  bool alive(int loc, const Valuation& t) const;
  bool timeout_moment_within(int loc, const Valuation& t, const Rational& d) const;

  const Automaton& a_;
};

}  // namespace tspec
