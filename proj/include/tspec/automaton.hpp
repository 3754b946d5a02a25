#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tspec/zones.hpp"

namespace tspec {

struct Transition {
  int from = 0;
  Constraint guard = Constraint::truth();
  int action = 0;
  std::vector<ClockId> resets;
  int to = 0;
};

// Timed I/O automaton: guarded reset transitions between locations, an
// invariant and a co-invariant per location. Invariants bound how long time
// may progress; co-invariants bound how long the environment may withhold an
// expected input before the state times out.
struct Automaton {
  std::string name = "a";
  std::string description;
  std::vector<std::string> clocks;
  std::vector<std::string> actions;  // inputs first, then outputs
  int num_inputs = 0;
  std::vector<std::string> locations;
  int initial = 0;
  std::vector<Constraint> invariants;
  std::vector<Constraint> co_invariants;
  std::vector<Transition> transitions;

  int num_clocks() const { return static_cast<int>(clocks.size()); }
  int num_actions() const { return static_cast<int>(actions.size()); }
  int num_locations() const { return static_cast<int>(locations.size()); }
  bool is_input(int action) const { return action < num_inputs; }

  std::vector<std::string> input_names() const;
  std::vector<std::string> output_names() const;
  std::optional<int> action_id(const std::string& name) const;
  std::optional<int> clock_id(const std::string& name) const;
  std::optional<int> location_id(const std::string& name) const;
  std::vector<int> transitions_from(int loc, int action) const;

  int max_constant() const;
  bool has_strict_constraints() const;
};

// Per-location classification regions, all over the automaton's clock space.
//
//   alive       invariant and co-invariant both hold (plain states)
//   entry_err   invariant holds, co-invariant broken (action lands in the
//               error state)
//   entry_magic invariant broken (action lands in the timestop state)
//   shadow      delay targets that pass through entry_err (delay to error)
//   top         remaining delay targets (implicit timestop region)
struct LocationRegions {
  ZoneList alive;
  ZoneList entry_err;
  ZoneList entry_magic;
  ZoneList shadow;
  ZoneList top;
};

// Caches regions and normalized guards for one automaton.
class RegionCache {
 public:
  explicit RegionCache(const Automaton& a);

  const Automaton& automaton() const { return a_; }
  const LocationRegions& regions(int loc) const { return regions_[loc]; }
  const ZoneList& guard_zones(int transition) const { return guards_[transition]; }

 private:
  const Automaton& a_;
  std::vector<LocationRegions> regions_;
  std::vector<ZoneList> guards_;
};

std::vector<std::string> validate(const Automaton& a);

// Picks a valuation inside a non-empty canonical zone.
std::optional<Valuation> zone_sample(const Dbm& z);

struct NondeterminismWitness {
  int location;
  int action;
  Valuation at;
};

// Deterministic iff no location has two same-action transitions whose guards
// overlap inside the alive region.
std::optional<NondeterminismWitness> nondeterminism_witness(const Automaton& a);
inline bool is_deterministic(const Automaton& a) { return !nondeterminism_witness(a).has_value(); }

}  // namespace tspec
