#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "tspec/digitized.hpp"

namespace tspec {

// Prefix tree of canonical timed words on the delta grid. An edge is either
// one grid step or an action; a node exists iff its word is a trace (in TT).
// Per node, `in_te` marks error traces and `in_tr` realisable ones (TE ⊆ TR).
struct TraceNode {
  bool in_te = false;
  bool in_tr = false;
  std::map<int, std::unique_ptr<TraceNode>> act_children;
  std::unique_ptr<TraceNode> delay_child;
};

struct TripleTraces {
  std::vector<std::string> actions;  // inputs first
  int num_inputs = 0;
  Rational delta = Rational(1);
  int depth = 4;
  Rational horizon = Rational(12);
  bool exact = true;
  std::unique_ptr<TraceNode> root;

  TripleTraces() : root(std::make_unique<TraceNode>()) {}
  TripleTraces clone() const;

  int num_actions() const { return static_cast<int>(actions.size()); }
  std::vector<std::string> input_names() const {
    return {actions.begin(), actions.begin() + num_inputs};
  }
  std::vector<std::string> output_names() const {
    return {actions.begin() + num_inputs, actions.end()};
  }

  const TraceNode* find(const TimedWord& w) const;
  bool in_tt(const TimedWord& w) const { return find(w) != nullptr; }
  bool in_tr(const TimedWord& w) const {
    const TraceNode* n = find(w);
    return n && n->in_tr;
  }
  bool in_te(const TimedWord& w) const {
    const TraceNode* n = find(w);
    return n && n->in_te;
  }

  std::vector<TimedWord> all_words() const;
  void for_each(const std::function<void(const TimedWord&, const TraceNode&)>& f) const;

  bool same_as(const TripleTraces& o) const;
};

TripleTraces extract_triple_traces(const Digitized& d, int depth, const Rational& horizon);

// Def-6 closure predicates, interpreted within the tree's bounds.
struct TraceStructureReport {
  bool te_extension_closed = true;
  bool tt_prefix_closed = true;  // structural for trees, checked for coherence
  bool tr_prefix_closed = true;
  bool tr_fully_branching = true;
  bool tm_time_extension_closed = true;
  bool ok() const {
    return te_extension_closed && tt_prefix_closed && tr_prefix_closed && tr_fully_branching &&
           tm_time_extension_closed;
  }
};
TraceStructureReport check_trace_structure(const TripleTraces& t);

// Containment witness for the three trace sets (spec must include imp).
struct TraceRefinement {
  bool holds = true;
  TimedWord witness;
  std::string violated;  // "tt" | "tr" | "te"
};
TraceRefinement tt_refines(const TripleTraces& spec, const TripleTraces& imp);

TripleTraces tt_parallel(const TripleTraces& t0, const TripleTraces& t1);
TripleTraces tt_conjunction(const TripleTraces& t0, const TripleTraces& t1);
TripleTraces tt_disjunction(const TripleTraces& t0, const TripleTraces& t1);
TripleTraces tt_quotient(const TripleTraces& t0, const TripleTraces& t1);
TripleTraces tt_mirror(const TripleTraces& t);

std::string triple_traces_to_json(const TripleTraces& t);

}  // namespace tspec
