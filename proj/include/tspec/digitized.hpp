#pragma once

#include <map>
#include <vector>

#include "tspec/semantics.hpp"
#include "tspec/word.hpp"

namespace tspec {

// Explicit-state restriction of the semantics to a fixed time grid. Clock
// values are folded at max-constant + 1 (indistinguishable beyond it), which
// keeps the graph finite independently of the horizon; horizon and depth
// bound the walks that consume the graph. Transitions are the completed view:
// disabled inputs go to the error state, disabled outputs and delays to the
// timestop state. The unit-delay label is the last label index.
struct Digitized {
  std::vector<std::string> actions;  // inputs first
  int num_inputs = 0;
  Rational delta = Rational(1);
  Rational horizon = Rational(12);
  int depth = 4;
  bool exact = true;  // closed constraints sampled at delta=1

  struct State {
    StateKind kind = StateKind::Plain;
    int loc = -1;
    std::vector<Rational> val;
    bool operator<(const State& o) const {
      if (kind != o.kind) return kind < o.kind;
      if (loc != o.loc) return loc < o.loc;
      return val < o.val;
    }
  };

  std::vector<State> states;
  int initial = 0;
  // succ[state][label] -> sorted successor list; label == actions.size() is
  // the unit delay
  std::vector<std::vector<std::vector<int>>> succ;

  int num_actions() const { return static_cast<int>(actions.size()); }
  int delay_label() const { return num_actions(); }
  bool is_input(int a) const { return a < num_inputs; }
  std::vector<std::string> input_names() const {
    return {actions.begin(), actions.begin() + num_inputs};
  }
  std::vector<std::string> output_names() const {
    return {actions.begin() + num_inputs, actions.end()};
  }
};

Digitized digitize(const Automaton& a, const Rational& delta, const Rational& horizon, int depth);

// Subset construction on the completed view: subsets holding the error state
// collapse to it, other subsets shed timestop members.
Digitized determinize_explicit(const Digitized& d);

bool digitized_deterministic(const Digitized& d);

// Error-state reachability within the horizon/depth bounds of the walk.
struct DigitizedReach {
  bool reachable = false;
  TimedWord witness;
};
DigitizedReach digitized_bot_reachable(const Digitized& d);

}  // namespace tspec
