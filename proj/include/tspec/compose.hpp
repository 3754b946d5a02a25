#pragma once

#include "tspec/semantics.hpp"

namespace tspec {

enum class ComposeOp { Parallel, Conjunction, Disjunction, Quotient };

enum class Cell { Top, Bot, Pair, Left, Right };

// State-combination algebra: how a pair of component state classes resolves
// under each operator (c0 = first operand, c1 = second).
Cell table1(ComposeOp op, StateKind c0, StateKind c1);

// Embeds a zone over one operand's clocks into the joint clock space.
Dbm embed_dbm(const Dbm& z, int joint_clocks, const std::vector<int>& clock_map);
ZoneList lift_zones(const ZoneList& zl, int joint_clocks, const std::vector<int>& clock_map);

struct LiftedRegions {
  ZoneList alive, shadow, top, entry_err, entry_magic;
};
LiftedRegions lift_regions(const RegionCache& cache, int loc, int joint_clocks,
                           const std::vector<int>& clock_map);

// One completed reaction of an operand to an action: either a real transition
// split by the class of its target, or a completion piece on the guard gap.
// kind Plain with to == -1 means "does not participate, stays put".
struct SideResponse {
  StateKind kind = StateKind::Plain;
  int to = -1;
  std::vector<ClockId> resets;  // already in joint ids
  ZoneList piece;               // joint-space region where this reaction fires
};

// side_action == -1 yields the single stay response.
std::vector<SideResponse> completed_responses(const RegionCache& cache, int loc, int side_action,
                                              int joint_clocks, const std::vector<int>& clock_map);

// Synchronized products over completed views with explicit error/timestop
// sink locations. Conjunction and disjunction embed single-component
// continuations for the deferring table entries.
Automaton compose(ComposeOp op, const Automaton& a0, const Automaton& a1);

inline Automaton compose_parallel(const Automaton& a0, const Automaton& a1) {
  return compose(ComposeOp::Parallel, a0, a1);
}
inline Automaton compose_conjunction(const Automaton& a0, const Automaton& a1) {
  return compose(ComposeOp::Conjunction, a0, a1);
}
inline Automaton compose_disjunction(const Automaton& a0, const Automaton& a1) {
  return compose(ComposeOp::Disjunction, a0, a1);
}
inline Automaton compose_quotient(const Automaton& a0, const Automaton& a1) {
  return compose(ComposeOp::Quotient, a0, a1);
}

// Interchanges inputs with outputs and the error state with the timestop
// state on the completed view. Requires a deterministic operand.
Automaton mirror(const Automaton& a);

}  // namespace tspec
