#include "tspec/digitized.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tspec {

namespace {

struct Builder {
  const Automaton& a;
  PointSimulator sim;
  Digitized out;
  std::map<Digitized::State, int> index;
  Rational clamp_at;

  explicit Builder(const Automaton& aut) : a(aut), sim(aut) {}

  Digitized::State clamp(const PointState& p) const {
    Digitized::State s;
    s.kind = p.kind;
    if (p.kind == StateKind::Plain) {
      s.loc = p.loc;
      s.val.reserve(p.val.size());
      for (const auto& v : p.val.values) s.val.push_back(std::min(v, clamp_at));
    }
    return s;
  }

  int intern(const Digitized::State& s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(out.states.size());
    index.emplace(s, id);
    out.states.push_back(s);
    out.succ.emplace_back(out.num_actions() + 1);
    return id;
  }

  PointState to_point(const Digitized::State& s) const {
    if (s.kind == StateKind::Bot) return PointState::bot();
    if (s.kind == StateKind::Top) return PointState::top();
    PointState p;
    p.kind = StateKind::Plain;
    p.loc = s.loc;
    p.val = Valuation(static_cast<int>(s.val.size()));
    p.val.values = s.val;
    return p;
  }
};

}  // namespace

Digitized digitize(const Automaton& a, const Rational& delta, const Rational& horizon, int depth) {
  Builder b(a);
  b.out.actions = a.actions;
  b.out.num_inputs = a.num_inputs;
  b.out.delta = delta;
  b.out.horizon = horizon;
  b.out.depth = depth;
  b.out.exact = !a.has_strict_constraints() && delta == Rational(1);
  b.clamp_at = Rational(a.max_constant() + 1);

  int init = b.intern(b.clamp(b.sim.initial()));
  b.out.initial = init;

  std::deque<int> work{init};
  std::set<int> seen{init};
  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    Digitized::State state = b.out.states[id];
    PointState p = b.to_point(state);
    for (int label = 0; label <= b.out.num_actions(); ++label) {
      std::vector<int> targets;
      if (label == b.out.delay_label()) {
        PointState q = b.sim.delay_step(p, delta);
        targets.push_back(b.intern(b.clamp(q)));
      } else {
        for (const auto& q : b.sim.action_step(p, label)) targets.push_back(b.intern(b.clamp(q)));
      }
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      b.out.succ[id][label] = targets;
      for (int t : targets)
        if (seen.insert(t).second) work.push_back(t);
    }
  }
  return b.out;
}

Digitized determinize_explicit(const Digitized& d) {
  Digitized out;
  out.actions = d.actions;
  out.num_inputs = d.num_inputs;
  out.delta = d.delta;
  out.horizon = d.horizon;
  out.depth = d.depth;
  out.exact = d.exact;

  auto reduce = [&](std::set<int> subset) -> std::set<int> {
    bool has_bot = false, has_top = false;
    for (int s : subset) {
      if (d.states[s].kind == StateKind::Bot) has_bot = true;
      if (d.states[s].kind == StateKind::Top) has_top = true;
    }
    if (has_bot) return {-1};  // canonical bot marker
    if (has_top) {
      std::set<int> plains;
      for (int s : subset)
        if (d.states[s].kind == StateKind::Plain) plains.insert(s);
      if (plains.empty()) return {-2};  // canonical top marker
      return plains;
    }
    return subset;
  };

  std::map<std::set<int>, int> index;
  auto intern = [&](const std::set<int>& subset) {
    auto it = index.find(subset);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(out.states.size());
    index.emplace(subset, id);
    Digitized::State st;
    if (subset == std::set<int>{-1}) st.kind = StateKind::Bot;
    else if (subset == std::set<int>{-2}) st.kind = StateKind::Top;
    else st.kind = StateKind::Plain;
    out.states.push_back(st);
    out.succ.emplace_back(out.num_actions() + 1);
    return id;
  };

  std::set<int> init = reduce({d.initial});
  out.initial = intern(init);
  std::deque<std::set<int>> work{init};
  std::set<std::set<int>> seen{init};
  while (!work.empty()) {
    std::set<int> subset = work.front();
    work.pop_front();
    int id = index.at(subset);
    for (int label = 0; label <= d.num_actions(); ++label) {
      std::set<int> image;
      if (subset == std::set<int>{-1}) {
        image = {-1};
      } else if (subset == std::set<int>{-2}) {
        if (label == d.delay_label()) image = {-2};
      } else {
        for (int s : subset)
          for (int t : d.succ[s][label]) image.insert(t);
        if (!image.empty()) image = reduce(image);
      }
      if (image.empty()) continue;  // dead: actions at the timestop state
      int tid = intern(image);
      out.succ[id][label] = {tid};
      if (seen.insert(image).second) work.push_back(image);
    }
  }
  return out;
}

bool digitized_deterministic(const Digitized& d) {
  for (const auto& row : d.succ)
    for (const auto& targets : row)
      if (targets.size() > 1) return false;
  return true;
}

DigitizedReach digitized_bot_reachable(const Digitized& d) {
  // BFS over (state, steps, elapsed) bounded by depth and horizon; the parent
  // chain doubles as the witness word.
  struct Node {
    int state;
    int actions_used;
    Rational elapsed;
    int parent;
    int label;  // edge into this node; -1 at root
  };
  std::vector<Node> nodes{{d.initial, 0, Rational(0), -1, -1}};
  std::set<std::tuple<int, int, Rational>> seen{{d.initial, 0, Rational(0)}};
  size_t head = 0;
  while (head < nodes.size()) {
    Node cur = nodes[head];
    if (d.states[cur.state].kind == StateKind::Bot) {
      TimedWord w;
      std::vector<int> labels;
      for (int i = static_cast<int>(head); nodes[i].parent >= 0; i = nodes[i].parent)
        labels.push_back(nodes[i].label);
      std::reverse(labels.begin(), labels.end());
      for (int l : labels) {
        if (l == d.delay_label()) w.append_delay(d.delta);
        else w.append_action(d.actions[l]);
      }
      return {true, w};
    }
    for (int label = 0; label <= d.num_actions(); ++label) {
      int actions_used = cur.actions_used + (label == d.delay_label() ? 0 : 1);
      Rational elapsed = cur.elapsed + (label == d.delay_label() ? d.delta : Rational(0));
      if (actions_used > d.depth || elapsed > d.horizon) continue;
      for (int t : d.succ[cur.state][label]) {
        if (seen.insert({t, actions_used, elapsed}).second)
          nodes.push_back({t, actions_used, elapsed, static_cast<int>(head), label});
      }
    }
    ++head;
  }
  return {false, {}};
}

}  // namespace tspec
