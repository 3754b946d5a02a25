#include "tspec/traces.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tspec {

namespace {

std::unique_ptr<TraceNode> clone_node(const TraceNode& n) {
  auto c = std::make_unique<TraceNode>();
  c->in_te = n.in_te;
  c->in_tr = n.in_tr;
  for (const auto& [a, child] : n.act_children) c->act_children[a] = clone_node(*child);
  if (n.delay_child) c->delay_child = clone_node(*n.delay_child);
  return c;
}

}  // namespace

TripleTraces TripleTraces::clone() const {
  TripleTraces t;
  t.actions = actions;
  t.num_inputs = num_inputs;
  t.delta = delta;
  t.depth = depth;
  t.horizon = horizon;
  t.exact = exact;
  t.root = clone_node(*root);
  return t;
}

const TraceNode* TripleTraces::find(const TimedWord& w) const {
  const TraceNode* n = root.get();
  for (const auto& e : w.elements()) {
    if (!n) return nullptr;
    if (std::holds_alternative<Rational>(e)) {
      Rational d = std::get<Rational>(e);
      if (d.denominator() != 0 && (d / delta).denominator() != 1) return nullptr;
      long long steps = (d / delta).numerator();
      for (long long i = 0; i < steps && n; ++i) n = n->delay_child.get();
    } else {
      const std::string& a = std::get<std::string>(e);
      auto it = std::find(actions.begin(), actions.end(), a);
      if (it == actions.end()) return nullptr;
      int id = static_cast<int>(it - actions.begin());
      if (!n) return nullptr;
      auto cit = n->act_children.find(id);
      n = cit == n->act_children.end() ? nullptr : cit->second.get();
    }
  }
  return n;
}

void TripleTraces::for_each(const std::function<void(const TimedWord&, const TraceNode&)>& f) const {
  std::function<void(const TraceNode&, TimedWord&)> walk = [&](const TraceNode& n, TimedWord& w) {
    f(w, n);
    if (n.delay_child) {
      TimedWord next = w.concat(TimedWord::delay(delta));
      walk(*n.delay_child, next);
    }
    for (const auto& [a, child] : n.act_children) {
      TimedWord next = w.concat(TimedWord::action(actions[a]));
      walk(*child, next);
    }
  };
  TimedWord e;
  walk(*root, e);
}

std::vector<TimedWord> TripleTraces::all_words() const {
  std::vector<TimedWord> out;
  for_each([&](const TimedWord& w, const TraceNode&) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

bool TripleTraces::same_as(const TripleTraces& o) const {
  if (actions != o.actions || num_inputs != o.num_inputs || delta != o.delta) return false;
  std::function<bool(const TraceNode*, const TraceNode*)> eq = [&](const TraceNode* a,
                                                                   const TraceNode* b) {
    if (!a || !b) return a == b;
    if (a->in_te != b->in_te || a->in_tr != b->in_tr) return false;
    if (!eq(a->delay_child.get(), b->delay_child.get())) return false;
    if (a->act_children.size() != b->act_children.size()) return false;
    for (const auto& [k, child] : a->act_children) {
      auto it = b->act_children.find(k);
      if (it == b->act_children.end()) return false;
      if (!eq(child.get(), it->second.get())) return false;
    }
    return true;
  };
  return eq(root.get(), o.root.get());
}

TripleTraces extract_triple_traces(const Digitized& d, int depth, const Rational& horizon) {
  TripleTraces t;
  t.actions = d.actions;
  t.num_inputs = d.num_inputs;
  t.delta = d.delta;
  t.depth = depth;
  t.horizon = horizon;
  t.exact = d.exact;

  struct Frame {
    std::set<int> states;
    TraceNode* node;
    int actions_used;
    Rational elapsed;
  };

  auto flags = [&](const std::set<int>& states, TraceNode* node) {
    for (int s : states) {
      if (d.states[s].kind == StateKind::Bot) node->in_te = true;
      if (d.states[s].kind != StateKind::Top) node->in_tr = true;  // plain or bot
    }
    node->in_tr = node->in_tr || node->in_te;
  };

  std::vector<Frame> stack;
  flags({d.initial}, t.root.get());
  stack.push_back({{d.initial}, t.root.get(), 0, Rational(0)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.elapsed + d.delta <= horizon) {
      std::set<int> image;
      for (int s : f.states)
        for (int x : d.succ[s][d.delay_label()]) image.insert(x);
      if (!image.empty()) {
        f.node->delay_child = std::make_unique<TraceNode>();
        flags(image, f.node->delay_child.get());
        stack.push_back({std::move(image), f.node->delay_child.get(), f.actions_used,
                         f.elapsed + d.delta});
      }
    }
    if (f.actions_used + 1 <= depth) {
      for (int a = 0; a < d.num_actions(); ++a) {
        std::set<int> image;
        for (int s : f.states)
          for (int x : d.succ[s][a]) image.insert(x);
        if (image.empty()) continue;  // action at the timestop state: trace dies
        auto child = std::make_unique<TraceNode>();
        flags(image, child.get());
        TraceNode* cp = child.get();
        f.node->act_children[a] = std::move(child);
        stack.push_back({std::move(image), cp, f.actions_used + 1, f.elapsed});
      }
    }
  }
  return t;
}

TraceStructureReport check_trace_structure(const TripleTraces& t) {
  TraceStructureReport r;
  struct W {
    const TripleTraces& t;
    TraceStructureReport& r;
    void walk(const TraceNode& n, int actions_used, const Rational& elapsed, bool parent_tr,
              bool is_root) {
      bool can_delay = elapsed + t.delta <= t.horizon;
      bool can_act = actions_used + 1 <= t.depth;
      if (!is_root && n.in_tr && !parent_tr) r.tr_prefix_closed = false;
      if (n.in_te) {
        // extension closure: every in-bounds extension exists and is an error
        if (can_delay && (!n.delay_child || !n.delay_child->in_te)) r.te_extension_closed = false;
        if (can_act)
          for (int a = 0; a < t.num_actions(); ++a) {
            auto it = n.act_children.find(a);
            if (it == n.act_children.end() || !it->second->in_te) r.te_extension_closed = false;
          }
      }
      if (n.in_tr) {
        // fully branching: every timed action extends a realisable trace
        if (can_delay && !n.delay_child) r.tr_fully_branching = false;
        if (can_act)
          for (int a = 0; a < t.num_actions(); ++a)
            if (!n.act_children.count(a)) r.tr_fully_branching = false;
      } else {
        // TT\TR is closed under appending delays
        if (can_delay && (!n.delay_child || n.delay_child->in_tr))
          r.tm_time_extension_closed = false;
      }
      if (n.delay_child) walk(*n.delay_child, actions_used, elapsed + t.delta, n.in_tr, false);
      for (const auto& [a, child] : n.act_children)
        walk(*child, actions_used + 1, elapsed, n.in_tr, false);
    }
  } w{t, r};
  w.walk(*t.root, 0, Rational(0), true, true);
  return r;
}

TraceRefinement tt_refines(const TripleTraces& spec, const TripleTraces& imp) {
  TraceRefinement out;
  std::function<bool(const TraceNode*, const TraceNode*, TimedWord&)> walk =
      [&](const TraceNode* s, const TraceNode* i, TimedWord& w) -> bool {
    if (!i) return true;
    if (!s) {
      out = {false, w, "tt"};
      return false;
    }
    if (i->in_te && !s->in_te) {
      out = {false, w, "te"};
      return false;
    }
    if (i->in_tr && !s->in_tr) {
      out = {false, w, "tr"};
      return false;
    }
    if (i->delay_child) {
      TimedWord next = w.concat(TimedWord::delay(imp.delta));
      if (!walk(s->delay_child.get(), i->delay_child.get(), next)) return false;
    }
    for (const auto& [a, child] : i->act_children) {
      auto it = s->act_children.find(a);
      TimedWord next = w.concat(TimedWord::action(imp.actions[a]));
      const TraceNode* sc = it == s->act_children.end() ? nullptr : it->second.get();
      if (!walk(sc, child.get(), next)) return false;
    }
    return true;
  };
  TimedWord e;
  if (spec.actions != imp.actions || spec.delta != imp.delta)
    throw std::invalid_argument("tt_refines: incompatible alphabets or grids");
  walk(spec.root.get(), imp.root.get(), e);
  return out;
}

namespace {

// Shared scaffolding for the four trace-operator formulas: enumerate the
// bounded composite universe, carrying cursors into the operand trees plus
// the operator's sticky prefix flags.
struct OpBuild {
  const TripleTraces& t0;
  const TripleTraces& t1;
  TripleTraces out;
  // operand action id for each composite action id; -1 when not in alphabet
  std::vector<int> map0, map1;

  OpBuild(const TripleTraces& a, const TripleTraces& b) : t0(a), t1(b) {
    if (a.delta != b.delta) throw std::invalid_argument("trace operator: grid mismatch");
    out.delta = a.delta;
    out.depth = std::min(a.depth, b.depth);
    out.horizon = std::min(a.horizon, b.horizon);
    out.exact = a.exact && b.exact;
  }

  void finish_alphabet() {
    map0.assign(out.actions.size(), -1);
    map1.assign(out.actions.size(), -1);
    for (size_t i = 0; i < out.actions.size(); ++i) {
      for (size_t j = 0; j < t0.actions.size(); ++j)
        if (t0.actions[j] == out.actions[i]) map0[i] = static_cast<int>(j);
      for (size_t j = 0; j < t1.actions.size(); ++j)
        if (t1.actions[j] == out.actions[i]) map1[i] = static_cast<int>(j);
    }
  }
};

bool node_tr(const TraceNode* n) { return n && n->in_tr; }
bool node_te(const TraceNode* n) { return n && n->in_te; }
bool node_tm(const TraceNode* n) { return n && !n->in_tr; }          // TT \ TR
bool node_plain(const TraceNode* n) { return n && n->in_tr && !n->in_te; }  // TR \ TE

}  // namespace

TripleTraces tt_parallel(const TripleTraces& t0, const TripleTraces& t1) {
  for (const auto& o : t0.output_names())
    for (const auto& p : t1.output_names())
      if (o == p) throw std::invalid_argument("tt_parallel: output sets overlap");
  OpBuild b(t0, t1);
  std::vector<std::string> outputs = t0.output_names();
  for (const auto& o : t1.output_names()) outputs.push_back(o);
  std::vector<std::string> inputs;
  for (const auto& i : t0.input_names())
    if (std::find(outputs.begin(), outputs.end(), i) == outputs.end()) inputs.push_back(i);
  for (const auto& i : t1.input_names())
    if (std::find(outputs.begin(), outputs.end(), i) == outputs.end() &&
        std::find(inputs.begin(), inputs.end(), i) == inputs.end())
      inputs.push_back(i);
  b.out.actions = inputs;
  for (const auto& o : outputs) b.out.actions.push_back(o);
  b.out.num_inputs = static_cast<int>(inputs.size());
  b.finish_alphabet();

  struct Flags {
    const TraceNode* c0;
    const TraceNode* c1;
    bool te_live;
    bool tm_live;
    bool pp0_ok;  // projections of all strict prefixes plain in t0
    bool pp1_ok;
  };

  auto core = [&](Flags& f) {
    bool te_core = (node_te(f.c0) && node_tr(f.c1)) || (node_te(f.c1) && node_tr(f.c0));
    f.te_live = f.te_live || te_core;
    bool tm_core = (node_tm(f.c0) && f.pp1_ok) || (node_tm(f.c1) && f.pp0_ok);
    f.tm_live = f.tm_live || tm_core;
  };
  auto membership = [&](const Flags& f, TraceNode* n) -> bool {
    bool te = f.te_live;
    bool tr = te || (node_plain(f.c0) && node_plain(f.c1));
    bool tt = tr || f.tm_live;
    if (!tt) return false;
    n->in_te = te;
    n->in_tr = tr;
    return true;
  };

  struct Frame {
    Flags f;
    TraceNode* node;
    int actions_used;
    Rational elapsed;
  };
  std::vector<Frame> stack;
  Flags init{t0.root.get(), t1.root.get(), false, false, true, true};
  core(init);
  if (!membership(init, b.out.root.get()))
    return b.out;  // empty structure (cannot happen for valid operands)
  stack.push_back({init, b.out.root.get(), 0, Rational(0)});

  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    // step: -1 = delay, otherwise composite action id
    for (int step = -1; step < b.out.num_actions(); ++step) {
      bool is_delay = step < 0;
      if (is_delay && fr.elapsed + b.out.delta > b.out.horizon) continue;
      if (!is_delay && fr.actions_used + 1 > b.out.depth) continue;
      Flags nf = fr.f;
      // prefix flags account for the node being left (prose reading of the
      // strict-prefix quantifier: projections of strict prefixes)
      nf.pp0_ok = fr.f.pp0_ok && node_plain(fr.f.c0);
      nf.pp1_ok = fr.f.pp1_ok && node_plain(fr.f.c1);
      if (is_delay) {
        nf.c0 = fr.f.c0 ? fr.f.c0->delay_child.get() : nullptr;
        nf.c1 = fr.f.c1 ? fr.f.c1->delay_child.get() : nullptr;
      } else {
        nf.tm_live = false;  // magic closure extends by delays only
        int a0 = b.map0[step], a1 = b.map1[step];
        if (a0 >= 0) {
          if (fr.f.c0) {
            auto it = fr.f.c0->act_children.find(a0);
            nf.c0 = it == fr.f.c0->act_children.end() ? nullptr : it->second.get();
          } else {
            nf.c0 = nullptr;
          }
        }
        if (a1 >= 0) {
          if (fr.f.c1) {
            auto it = fr.f.c1->act_children.find(a1);
            nf.c1 = it == fr.f.c1->act_children.end() ? nullptr : it->second.get();
          } else {
            nf.c1 = nullptr;
          }
        }
      }
      core(nf);
      auto node = std::make_unique<TraceNode>();
      if (!membership(nf, node.get())) continue;
      TraceNode* np = node.get();
      if (is_delay) fr.node->delay_child = std::move(node);
      else fr.node->act_children[step] = std::move(node);
      stack.push_back({nf, np, fr.actions_used + (is_delay ? 0 : 1),
                       fr.elapsed + (is_delay ? b.out.delta : Rational(0))});
    }
  }
  return b.out;
}

namespace {

void require_identical_alphabets(const TripleTraces& t0, const TripleTraces& t1,
                                 const char* what) {
  if (t0.input_names() != t1.input_names() || t0.output_names() != t1.output_names())
    throw std::invalid_argument(std::string(what) + ": alphabets must be identical");
}

// Conjunction and disjunction share one walker; identical alphabets mean both
// cursors track the composite word directly.
TripleTraces meetjoin(const TripleTraces& t0, const TripleTraces& t1, bool conjunction) {
  OpBuild b(t0, t1);
  b.out.actions = t0.actions;
  b.out.num_inputs = t0.num_inputs;
  b.finish_alphabet();

  struct Flags {
    const TraceNode* c0;
    const TraceNode* c1;
    bool tm_live;
    bool seen_tm0, seen_tm1;      // disjunction: some prefix magic on that side
    bool strict_tr0, strict_tr1;  // conjunction: all strict prefixes realisable
  };
  auto membership = [&](Flags& f, TraceNode* n) -> bool {
    f.seen_tm0 = f.seen_tm0 || node_tm(f.c0);
    f.seen_tm1 = f.seen_tm1 || node_tm(f.c1);
    bool te, tr, tm_core;
    if (conjunction) {
      te = node_te(f.c0) && node_te(f.c1);
      tr = node_tr(f.c0) && node_tr(f.c1);
      tm_core = (node_tm(f.c0) && f.strict_tr1) || (node_tm(f.c1) && f.strict_tr0);
    } else {
      te = node_te(f.c0) || node_te(f.c1);
      tr = node_tr(f.c0) || node_tr(f.c1);
      tm_core = (node_tm(f.c0) && f.seen_tm1) || (node_tm(f.c1) && f.seen_tm0);
    }
    f.tm_live = f.tm_live || tm_core;
    bool tt = tr || f.tm_live;
    if (!tt) return false;
    n->in_te = te;
    n->in_tr = tr;
    return true;
  };

  struct Frame {
    Flags f;
    TraceNode* node;
    int actions_used;
    Rational elapsed;
  };
  std::vector<Frame> stack;
  Flags init{t0.root.get(), t1.root.get(), false, false, false, true, true};
  if (!membership(init, b.out.root.get())) return b.out;
  stack.push_back({init, b.out.root.get(), 0, Rational(0)});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    for (int step = -1; step < b.out.num_actions(); ++step) {
      bool is_delay = step < 0;
      if (is_delay && fr.elapsed + b.out.delta > b.out.horizon) continue;
      if (!is_delay && fr.actions_used + 1 > b.out.depth) continue;
      Flags nf = fr.f;
      nf.strict_tr0 = fr.f.strict_tr0 && node_tr(fr.f.c0);
      nf.strict_tr1 = fr.f.strict_tr1 && node_tr(fr.f.c1);
      if (is_delay) {
        nf.c0 = fr.f.c0 ? fr.f.c0->delay_child.get() : nullptr;
        nf.c1 = fr.f.c1 ? fr.f.c1->delay_child.get() : nullptr;
      } else {
        nf.tm_live = false;
        auto advance = [&](const TraceNode* c, int a) -> const TraceNode* {
          if (!c) return nullptr;
          auto it = c->act_children.find(a);
          return it == c->act_children.end() ? nullptr : it->second.get();
        };
        nf.c0 = advance(fr.f.c0, b.map0[step]);
        nf.c1 = advance(fr.f.c1, b.map1[step]);
      }
      auto node = std::make_unique<TraceNode>();
      if (!membership(nf, node.get())) continue;
      TraceNode* np = node.get();
      if (is_delay) fr.node->delay_child = std::move(node);
      else fr.node->act_children[step] = std::move(node);
      stack.push_back({nf, np, fr.actions_used + (is_delay ? 0 : 1),
                       fr.elapsed + (is_delay ? b.out.delta : Rational(0))});
    }
  }
  return b.out;
}

}  // namespace

TripleTraces tt_conjunction(const TripleTraces& t0, const TripleTraces& t1) {
  require_identical_alphabets(t0, t1, "tt_conjunction");
  return meetjoin(t0, t1, true);
}

TripleTraces tt_disjunction(const TripleTraces& t0, const TripleTraces& t1) {
  require_identical_alphabets(t0, t1, "tt_disjunction");
  return meetjoin(t0, t1, false);
}

TripleTraces tt_quotient(const TripleTraces& t0, const TripleTraces& t1) {
  // t0 must dominate t1
  for (const auto& a : t1.actions)
    if (std::find(t0.actions.begin(), t0.actions.end(), a) == t0.actions.end())
      throw std::invalid_argument("tt_quotient: divisor alphabet not dominated");
  for (const auto& o : t1.output_names()) {
    auto outs = t0.output_names();
    if (std::find(outs.begin(), outs.end(), o) == outs.end())
      throw std::invalid_argument("tt_quotient: divisor outputs not dominated");
  }
  OpBuild b(t0, t1);
  // I = I0 ∪ O1, O = O0 \ O1
  std::vector<std::string> inputs = t0.input_names();
  for (const auto& o : t1.output_names())
    if (std::find(inputs.begin(), inputs.end(), o) == inputs.end()) inputs.push_back(o);
  std::vector<std::string> outputs;
  auto o1 = t1.output_names();
  for (const auto& o : t0.output_names())
    if (std::find(o1.begin(), o1.end(), o) == o1.end()) outputs.push_back(o);
  b.out.actions = inputs;
  for (const auto& o : outputs) b.out.actions.push_back(o);
  b.out.num_inputs = static_cast<int>(inputs.size());
  b.finish_alphabet();

  struct Flags {
    const TraceNode* c0;  // walks the composite word (alphabet of t0)
    const TraceNode* c1;  // walks its projection onto t1
    bool te_live;
    bool no_proj1_te_strict;  // no strict prefix projects to an error of t1
    bool no_tm0_strict;       // no strict prefix is magic in t0
    bool all_proj1_tr_incl;   // every prefix (incl. current) projects into TR1
    bool no_te0_incl;         // no prefix (incl. current) is an error of t0
  };
  auto membership = [&](Flags& f, TraceNode* n) -> bool {
    f.all_proj1_tr_incl = f.all_proj1_tr_incl && node_tr(f.c1);
    f.no_te0_incl = f.no_te0_incl && !node_te(f.c0);
    bool te_core = (node_te(f.c0) && f.no_proj1_te_strict) || (node_tm(f.c1) && f.no_tm0_strict);
    f.te_live = f.te_live || te_core;
    bool te = f.te_live;
    bool tr = te || (node_plain(f.c0) && node_plain(f.c1));
    bool tt_extra = (node_tm(f.c0) && f.all_proj1_tr_incl) || (node_te(f.c1) && f.no_te0_incl);
    bool tt = tr || tt_extra;
    if (!tt) return false;
    n->in_te = te;
    n->in_tr = tr;
    return true;
  };

  struct Frame {
    Flags f;
    TraceNode* node;
    int actions_used;
    Rational elapsed;
  };
  std::vector<Frame> stack;
  Flags init{t0.root.get(), t1.root.get(), false, true, true, true, true};
  if (!membership(init, b.out.root.get())) return b.out;
  stack.push_back({init, b.out.root.get(), 0, Rational(0)});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    for (int step = -1; step < b.out.num_actions(); ++step) {
      bool is_delay = step < 0;
      if (is_delay && fr.elapsed + b.out.delta > b.out.horizon) continue;
      if (!is_delay && fr.actions_used + 1 > b.out.depth) continue;
      Flags nf = fr.f;
      nf.no_proj1_te_strict = fr.f.no_proj1_te_strict && !node_te(fr.f.c1);
      nf.no_tm0_strict = fr.f.no_tm0_strict && !node_tm(fr.f.c0);
      if (is_delay) {
        nf.c0 = fr.f.c0 ? fr.f.c0->delay_child.get() : nullptr;
        nf.c1 = fr.f.c1 ? fr.f.c1->delay_child.get() : nullptr;
      } else {
        auto advance = [&](const TraceNode* c, int a) -> const TraceNode* {
          if (a < 0) return c;  // not in that alphabet: projection unchanged
          if (!c) return nullptr;
          auto it = c->act_children.find(a);
          return it == c->act_children.end() ? nullptr : it->second.get();
        };
        nf.c0 = advance(fr.f.c0, b.map0[step]);
        nf.c1 = advance(fr.f.c1, b.map1[step]);
      }
      auto node = std::make_unique<TraceNode>();
      if (!membership(nf, node.get())) continue;
      TraceNode* np = node.get();
      if (is_delay) fr.node->delay_child = std::move(node);
      else fr.node->act_children[step] = std::move(node);
      stack.push_back({nf, np, fr.actions_used + (is_delay ? 0 : 1),
                       fr.elapsed + (is_delay ? b.out.delta : Rational(0))});
    }
  }
  return b.out;
}

TripleTraces tt_mirror(const TripleTraces& t) {
  TripleTraces out = t.clone();
  // swap inputs and outputs
  out.actions.clear();
  for (const auto& o : t.output_names()) out.actions.push_back(o);
  for (const auto& i : t.input_names()) out.actions.push_back(i);
  out.num_inputs = t.num_actions() - t.num_inputs;
  // remap child keys to the permuted action ids
  std::vector<int> remap(t.num_actions());
  for (int a = 0; a < t.num_actions(); ++a) {
    auto it = std::find(out.actions.begin(), out.actions.end(), t.actions[a]);
    remap[a] = static_cast<int>(it - out.actions.begin());
  }
  std::function<void(TraceNode&)> walk = [&](TraceNode& n) {
    bool te = n.in_te, tr = n.in_tr;
    n.in_te = !tr;  // TE' = TT \ TR
    n.in_tr = !te;  // TR' = TT \ TE
    std::map<int, std::unique_ptr<TraceNode>> rekeyed;
    for (auto& [a, child] : n.act_children) {
      walk(*child);
      rekeyed[remap[a]] = std::move(child);
    }
    n.act_children = std::move(rekeyed);
    if (n.delay_child) walk(*n.delay_child);
  };
  walk(*out.root);
  return out;
}

std::string triple_traces_to_json(const TripleTraces& t) {
  nlohmann::json j;
  j["alphabet"]["inputs"] = t.input_names();
  j["alphabet"]["outputs"] = t.output_names();
  j["delta"] = to_double(t.delta);
  j["depth"] = t.depth;
  j["horizon"] = to_double(t.horizon);
  j["exact"] = t.exact;
  auto word_json = [](const TimedWord& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : w.elements()) {
      if (std::holds_alternative<Rational>(e)) arr.push_back(to_double(std::get<Rational>(e)));
      else arr.push_back(std::get<std::string>(e));
    }
    return arr;
  };
  nlohmann::json tt = nlohmann::json::array(), tr = nlohmann::json::array(),
                 te = nlohmann::json::array();
  for (const auto& w : t.all_words()) {
    const TraceNode* n = t.find(w);
    tt.push_back(word_json(w));
    if (n->in_tr) tr.push_back(word_json(w));
    if (n->in_te) te.push_back(word_json(w));
  }
  j["tt"] = tt;
  j["tr"] = tr;
  j["te"] = te;
  return j.dump(2);
}

}  // namespace tspec
