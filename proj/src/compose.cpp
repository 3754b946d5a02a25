#include "tspec/compose.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "tspec/textio.hpp"

namespace tspec {

Cell table1(ComposeOp op, StateKind c0, StateKind c1) {
  using K = StateKind;
  switch (op) {
    case ComposeOp::Parallel:
      if (c0 == K::Top || c1 == K::Top) return Cell::Top;
      if (c0 == K::Bot || c1 == K::Bot) return Cell::Bot;
      return Cell::Pair;
    case ComposeOp::Conjunction:
      if (c0 == K::Top || c1 == K::Top) return Cell::Top;
      if (c0 == K::Bot && c1 == K::Bot) return Cell::Bot;
      if (c0 == K::Bot) return Cell::Right;
      if (c1 == K::Bot) return Cell::Left;
      return Cell::Pair;
    case ComposeOp::Disjunction:
      if (c0 == K::Bot || c1 == K::Bot) return Cell::Bot;
      if (c0 == K::Top && c1 == K::Top) return Cell::Top;
      if (c0 == K::Top) return Cell::Right;
      if (c1 == K::Top) return Cell::Left;
      return Cell::Pair;
    case ComposeOp::Quotient:
      if (c1 == K::Top) return Cell::Bot;
      if (c1 == K::Bot) return c0 == K::Bot ? Cell::Bot : Cell::Top;
      if (c0 == K::Top) return Cell::Top;
      if (c0 == K::Bot) return Cell::Bot;
      return Cell::Pair;
  }
  return Cell::Bot;
}

Dbm embed_dbm(const Dbm& z, int joint_clocks, const std::vector<int>& clock_map) {
  if (z.empty()) return Dbm::unconstrained(joint_clocks).constrained_bound(0, 0, DbmBound::lt(0));
  Dbm out = Dbm::unconstrained(joint_clocks);
  int n = z.clocks();
  auto to_joint = [&](int i) { return i == 0 ? 0 : clock_map[i - 1] + 1; };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      const DbmBound& b = z.at(i, j);
      if (b.inf) continue;
      out = out.constrained_bound(to_joint(i), to_joint(j), b);
    }
  return out;
}

ZoneList lift_zones(const ZoneList& zl, int joint_clocks, const std::vector<int>& clock_map) {
  ZoneList out;
  for (const auto& z : zl) {
    if (z.empty()) continue;
    Dbm e = embed_dbm(z, joint_clocks, clock_map);
    if (!e.empty()) out.push_back(e);
  }
  return out;
}

LiftedRegions lift_regions(const RegionCache& cache, int loc, int joint_clocks,
                           const std::vector<int>& clock_map) {
  const LocationRegions& r = cache.regions(loc);
  LiftedRegions out;
  out.alive = lift_zones(r.alive, joint_clocks, clock_map);
  out.shadow = lift_zones(r.shadow, joint_clocks, clock_map);
  out.top = lift_zones(r.top, joint_clocks, clock_map);
  out.entry_err = lift_zones(r.entry_err, joint_clocks, clock_map);
  out.entry_magic = lift_zones(r.entry_magic, joint_clocks, clock_map);
  return out;
}

std::vector<SideResponse> completed_responses(const RegionCache& cache, int loc, int side_action,
                                              int joint_clocks, const std::vector<int>& clock_map) {
  std::vector<SideResponse> out;
  if (side_action < 0) {
    SideResponse stay;
    stay.kind = StateKind::Plain;
    stay.to = -1;
    stay.piece = zones_all(joint_clocks);
    out.push_back(std::move(stay));
    return out;
  }
  const Automaton& a = cache.automaton();
  ZoneList covered;
  for (int ti : a.transitions_from(loc, side_action)) {
    const Transition& t = a.transitions[ti];
    ZoneList guard = lift_zones(cache.guard_zones(ti), joint_clocks, clock_map);
    if (zl_empty(guard)) continue;
    covered = zl_union(covered, guard);
    std::vector<ClockId> joint_resets;
    for (ClockId c : t.resets) joint_resets.push_back(clock_map[c]);
    const LocationRegions& tgt = cache.regions(t.to);
    auto classify = [&](const ZoneList& region, StateKind kind) {
      ZoneList pre = zl_pre_reset(lift_zones(region, joint_clocks, clock_map), joint_resets);
      ZoneList piece = zl_intersect(guard, pre);
      if (zl_empty(piece)) return;
      SideResponse r;
      r.kind = kind;
      r.to = kind == StateKind::Plain ? t.to : -1;
      if (kind == StateKind::Plain) r.resets = joint_resets;
      r.piece = std::move(piece);
      out.push_back(std::move(r));
    };
    classify(tgt.alive, StateKind::Plain);
    classify(tgt.entry_err, StateKind::Bot);
    classify(tgt.entry_magic, StateKind::Top);
  }
  ZoneList gap = zl_subtract(zones_all(joint_clocks), covered, joint_clocks);
  if (!zl_empty(gap)) {
    SideResponse r;
    r.kind = a.is_input(side_action) ? StateKind::Bot : StateKind::Top;
    r.piece = std::move(gap);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

struct ProductBuilder {
  ComposeOp op;
  const Automaton& a0;
  const Automaton& a1;
  RegionCache cache0;
  RegionCache cache1;
  Automaton out;
  int joint_clocks = 0;
  std::vector<int> map0, map1;   // side clock -> joint clock
  std::vector<int> act0, act1;   // composite action -> side action id (-1 absent)
  std::map<std::pair<int, int>, int> pair_ids;
  std::map<int, int> left_ids, right_ids;
  int bot_id = -1, top_id = -1;
  std::deque<int> work;  // location ids whose transitions are pending
  std::vector<LiftedRegions> lifted0, lifted1;

  ProductBuilder(ComposeOp o, const Automaton& x0, const Automaton& x1)
      : op(o), a0(x0), a1(x1), cache0(x0), cache1(x1) {}

  void setup_clocks() {
    std::set<std::string> used;
    for (const auto& c : a0.clocks) {
      out.clocks.push_back(c);
      used.insert(c);
      map0.push_back(static_cast<int>(out.clocks.size()) - 1);
    }
    for (const auto& c : a1.clocks) {
      std::string name = c;
      while (used.count(name)) name += "_r";
      used.insert(name);
      out.clocks.push_back(name);
      map1.push_back(static_cast<int>(out.clocks.size()) - 1);
    }
    joint_clocks = out.num_clocks();
    for (int l = 0; l < a0.num_locations(); ++l)
      lifted0.push_back(lift_regions(cache0, l, joint_clocks, map0));
    for (int l = 0; l < a1.num_locations(); ++l)
      lifted1.push_back(lift_regions(cache1, l, joint_clocks, map1));
  }

  void setup_alphabet() {
    std::vector<std::string> inputs, outputs;
    auto i0 = a0.input_names(), o0 = a0.output_names();
    auto i1 = a1.input_names(), o1 = a1.output_names();
    auto contains = [](const std::vector<std::string>& v, const std::string& x) {
      return std::find(v.begin(), v.end(), x) != v.end();
    };
    switch (op) {
      case ComposeOp::Parallel:
        outputs = o0;
        for (const auto& o : o1) outputs.push_back(o);
        for (const auto& i : i0)
          if (!contains(outputs, i)) inputs.push_back(i);
        for (const auto& i : i1)
          if (!contains(outputs, i) && !contains(inputs, i)) inputs.push_back(i);
        break;
      case ComposeOp::Conjunction:
      case ComposeOp::Disjunction:
        inputs = i0;
        outputs = o0;
        break;
      case ComposeOp::Quotient:
        inputs = i0;
        for (const auto& o : o1)
          if (!contains(inputs, o)) inputs.push_back(o);
        for (const auto& o : o0)
          if (!contains(o1, o)) outputs.push_back(o);
        break;
    }
    out.actions = inputs;
    for (const auto& o : outputs) out.actions.push_back(o);
    out.num_inputs = static_cast<int>(inputs.size());
    act0.assign(out.num_actions(), -1);
    act1.assign(out.num_actions(), -1);
    for (int a = 0; a < out.num_actions(); ++a) {
      if (auto id = a0.action_id(out.actions[a])) act0[a] = *id;
      if (auto id = a1.action_id(out.actions[a])) act1[a] = *id;
    }
  }

  int fresh_location(const std::string& base, const Constraint& inv, const Constraint& coinv) {
    std::string name = base;
    while (out.location_id(name)) name += "_";
    out.locations.push_back(name);
    out.invariants.push_back(inv);
    out.co_invariants.push_back(coinv);
    return out.num_locations() - 1;
  }

  int bot_sink() {
    if (bot_id < 0) bot_id = fresh_location("BOT", Constraint::truth(), Constraint::falsity());
    return bot_id;
  }

  int top_sink() {
    if (top_id < 0) top_id = fresh_location("TOP", Constraint::falsity(), Constraint::truth());
    return top_id;
  }

  // Pair-location delay regions per the composition algebra.
  void pair_regions(int l0, int l1, ZoneList& alive, ZoneList& shadow, ZoneList& top) {
    const LiftedRegions& r0 = lifted0[l0];
    const LiftedRegions& r1 = lifted1[l1];
    int n = joint_clocks;
    ZoneList all = zones_all(n);
    switch (op) {
      case ComposeOp::Parallel: {
        alive = zl_intersect(r0.alive, r1.alive);
        ZoneList nt0 = zl_complement(r0.top, n);
        ZoneList nt1 = zl_complement(r1.top, n);
        ZoneList moments = zl_intersect(zl_union(r0.shadow, r1.shadow), zl_intersect(nt0, nt1));
        shadow = zl_future(moments);
        top = zl_subtract(zl_subtract(all, alive, n), shadow, n);
        return;
      }
      case ComposeOp::Conjunction: {
        shadow = zl_intersect(r0.shadow, r1.shadow);
        top = zl_union(r0.top, r1.top);
        alive = zl_subtract(zl_subtract(all, top, n), shadow, n);
        return;
      }
      case ComposeOp::Disjunction: {
        shadow = zl_union(r0.shadow, r1.shadow);
        top = zl_intersect(r0.top, r1.top);
        alive = zl_subtract(zl_subtract(all, top, n), shadow, n);
        return;
      }
      case ComposeOp::Quotient: {
        alive = zl_intersect(r0.alive, r1.alive);
        ZoneList nt1 = zl_complement(r1.top, n);
        ZoneList moments = zl_union(r1.top, zl_intersect(r0.shadow, nt1));
        shadow = zl_future(moments);
        top = zl_subtract(zl_subtract(all, alive, n), shadow, n);
        return;
      }
    }
  }

  int pair_location(int l0, int l1) {
    auto it = pair_ids.find({l0, l1});
    if (it != pair_ids.end()) return it->second;
    ZoneList alive, shadow, top;
    pair_regions(l0, l1, alive, shadow, top);
    Constraint inv = zl_to_constraint(zl_union(alive, shadow));     // not the timestop region
    Constraint coinv = zl_to_constraint(zl_union(alive, top));      // not the shadow
    int id = fresh_location(a0.locations[l0] + "__" + a1.locations[l1], inv, coinv);
    pair_ids[{l0, l1}] = id;
    work.push_back(encode_pair(l0, l1));
    return id;
  }

  int left_location(int l0) {
    auto it = left_ids.find(l0);
    if (it != left_ids.end()) return it->second;
    int id = fresh_location("L__" + a0.locations[l0],
                            a0.invariants[l0].rename_clocks(map0),
                            a0.co_invariants[l0].rename_clocks(map0));
    left_ids[l0] = id;
    work.push_back(encode_left(l0));
    return id;
  }

  int right_location(int l1) {
    auto it = right_ids.find(l1);
    if (it != right_ids.end()) return it->second;
    int id = fresh_location("R__" + a1.locations[l1],
                            a1.invariants[l1].rename_clocks(map1),
                            a1.co_invariants[l1].rename_clocks(map1));
    right_ids[l1] = id;
    work.push_back(encode_right(l1));
    return id;
  }

  // worklist encoding
  static int encode_pair(int l0, int l1) { return (l0 << 16) | l1; }
  static int encode_left(int l0) { return 0x40000000 | l0; }
  static int encode_right(int l1) { return 0x20000000 | l1; }

  int resolve_cell(Cell cell, const SideResponse& r0, const SideResponse& r1, int l0, int l1,
                   std::vector<ClockId>& resets) {
    switch (cell) {
      case Cell::Bot: return bot_sink();
      case Cell::Top: return top_sink();
      case Cell::Pair: {
        int t0 = r0.to >= 0 ? r0.to : l0;
        int t1 = r1.to >= 0 ? r1.to : l1;
        resets = r0.resets;
        for (ClockId c : r1.resets) resets.push_back(c);
        return pair_location(t0, t1);
      }
      case Cell::Left: {
        int t0 = r0.to >= 0 ? r0.to : l0;
        resets = r0.resets;
        return left_location(t0);
      }
      case Cell::Right: {
        int t1 = r1.to >= 0 ? r1.to : l1;
        resets = r1.resets;
        return right_location(t1);
      }
    }
    return bot_sink();
  }

  void add_transition(int from, int action, const ZoneList& piece, std::vector<ClockId> resets,
                      int to) {
    if (zl_empty(piece)) return;
    Transition t;
    t.from = from;
    t.action = action;
    t.guard = zl_to_constraint(piece);
    std::sort(resets.begin(), resets.end());
    resets.erase(std::unique(resets.begin(), resets.end()), resets.end());
    t.resets = std::move(resets);
    t.to = to;
    out.transitions.push_back(std::move(t));
  }

  void build_pair_transitions(int l0, int l1) {
    int from = pair_ids.at({l0, l1});
    ZoneList alive_joint = zl_intersect(lifted0[l0].alive, lifted1[l1].alive);

    // deferral regions where one side is already resolved and the product
    // behaves like the other component alone
    ZoneList defer0, defer1;
    if (op == ComposeOp::Conjunction) {
      defer1 = zl_intersect(lifted0[l0].shadow, lifted1[l1].alive);
      defer0 = zl_intersect(lifted0[l0].alive, lifted1[l1].shadow);
    } else if (op == ComposeOp::Disjunction) {
      defer1 = zl_intersect(lifted0[l0].top, lifted1[l1].alive);
      defer0 = zl_intersect(lifted0[l0].alive, lifted1[l1].top);
    }

    for (int ca = 0; ca < out.num_actions(); ++ca) {
      auto rs0 = completed_responses(cache0, l0, act0[ca], joint_clocks, map0);
      auto rs1 = completed_responses(cache1, l1, act1[ca], joint_clocks, map1);
      for (const auto& r0 : rs0)
        for (const auto& r1 : rs1) {
          ZoneList piece = zl_intersect(alive_joint, zl_intersect(r0.piece, r1.piece));
          if (zl_empty(piece)) continue;
          Cell cell = table1(op, r0.kind, r1.kind);
          std::vector<ClockId> resets;
          int to = resolve_cell(cell, r0, r1, l0, l1, resets);
          add_transition(from, ca, piece, std::move(resets), to);
        }
      // single-component behaviour inside the deferral regions
      if (!zl_empty(defer1) && act1[ca] >= 0)
        for (const auto& r1 : rs1) {
          ZoneList piece = zl_intersect(defer1, r1.piece);
          if (zl_empty(piece)) continue;
          std::vector<ClockId> resets;
          int to;
          if (r1.kind == StateKind::Plain && r1.to >= 0) {
            resets = r1.resets;
            to = right_location(r1.to);
          } else if (r1.kind == StateKind::Bot) {
            to = bot_sink();
          } else if (r1.kind == StateKind::Top) {
            to = top_sink();
          } else {
            continue;
          }
          add_transition(from, ca, piece, std::move(resets), to);
        }
      if (!zl_empty(defer0) && act0[ca] >= 0)
        for (const auto& r0 : rs0) {
          ZoneList piece = zl_intersect(defer0, r0.piece);
          if (zl_empty(piece)) continue;
          std::vector<ClockId> resets;
          int to;
          if (r0.kind == StateKind::Plain && r0.to >= 0) {
            resets = r0.resets;
            to = left_location(r0.to);
          } else if (r0.kind == StateKind::Bot) {
            to = bot_sink();
          } else if (r0.kind == StateKind::Top) {
            to = top_sink();
          } else {
            continue;
          }
          add_transition(from, ca, piece, std::move(resets), to);
        }
    }
  }

  void build_left_transitions(int l0) {
    int from = left_ids.at(l0);
    for (int ti : all_transitions_from(a0, l0)) {
      const Transition& t = a0.transitions[ti];
      int ca = composite_action(a0.actions[t.action]);
      std::vector<ClockId> resets;
      for (ClockId c : t.resets) resets.push_back(map0[c]);
      Transition nt;
      nt.from = from;
      nt.action = ca;
      nt.guard = t.guard.rename_clocks(map0);
      nt.resets = std::move(resets);
      nt.to = left_location(t.to);
      out.transitions.push_back(std::move(nt));
    }
  }

  void build_right_transitions(int l1) {
    int from = right_ids.at(l1);
    for (int ti : all_transitions_from(a1, l1)) {
      const Transition& t = a1.transitions[ti];
      int ca = composite_action(a1.actions[t.action]);
      std::vector<ClockId> resets;
      for (ClockId c : t.resets) resets.push_back(map1[c]);
      Transition nt;
      nt.from = from;
      nt.action = ca;
      nt.guard = t.guard.rename_clocks(map1);
      nt.resets = std::move(resets);
      nt.to = right_location(t.to);
      out.transitions.push_back(std::move(nt));
    }
  }

  static std::vector<int> all_transitions_from(const Automaton& a, int loc) {
    std::vector<int> r;
    for (int i = 0; i < static_cast<int>(a.transitions.size()); ++i)
      if (a.transitions[i].from == loc) r.push_back(i);
    return r;
  }

  int composite_action(const std::string& name) {
    auto id = out.action_id(name);
    if (!id) throw std::logic_error("composite alphabet is missing " + name);
    return *id;
  }

  Automaton build() {
    setup_clocks();
    setup_alphabet();

    Semantics s0(a0), s1(a1);
    StateKind k0 = s0.initial().kind;
    StateKind k1 = s1.initial().kind;
    Cell cell = table1(op, k0, k1);
    switch (cell) {
      case Cell::Bot: out.initial = bot_sink(); break;
      case Cell::Top: out.initial = top_sink(); break;
      case Cell::Pair: out.initial = pair_location(a0.initial, a1.initial); break;
      case Cell::Left: out.initial = left_location(a0.initial); break;
      case Cell::Right: out.initial = right_location(a1.initial); break;
    }
    while (!work.empty()) {
      int item = work.front();
      work.pop_front();
      if (item & 0x40000000) build_left_transitions(item & 0xffff);
      else if (item & 0x20000000) build_right_transitions(item & 0xffff);
      else build_pair_transitions(item >> 16, item & 0xffff);
    }
    return std::move(out);
  }
};

void check_composability(ComposeOp op, const Automaton& a0, const Automaton& a1) {
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  switch (op) {
    case ComposeOp::Parallel: {
      for (const auto& o : a0.output_names())
        for (const auto& p : a1.output_names())
          if (o == p)
            throw std::invalid_argument("parallel composition: shared output '" + o + "'");
      // a shared input/output pair is a synchronization, shared inputs stay inputs
      return;
    }
    case ComposeOp::Conjunction:
    case ComposeOp::Disjunction: {
      if (sorted(a0.input_names()) != sorted(a1.input_names()) ||
          sorted(a0.output_names()) != sorted(a1.output_names()))
        throw std::invalid_argument("conjunction/disjunction need identical alphabets");
      return;
    }
    case ComposeOp::Quotient: {
      auto o0 = sorted(a0.output_names());
      auto a0all = sorted(a0.actions);
      for (const auto& x : a1.actions)
        if (!std::binary_search(a0all.begin(), a0all.end(), x))
          throw std::invalid_argument("quotient: divisor alphabet not dominated");
      for (const auto& x : a1.output_names())
        if (!std::binary_search(o0.begin(), o0.end(), x))
          throw std::invalid_argument("quotient: divisor outputs not dominated");
      if (!is_deterministic(a1))
        throw std::invalid_argument("quotient: divisor must be deterministic");
      return;
    }
  }
}

Automaton compose(ComposeOp op, const Automaton& a0, const Automaton& a1) {
  check_composability(op, a0, a1);
  ProductBuilder b(op, a0, a1);
  Automaton r = b.build();
  switch (op) {
    case ComposeOp::Parallel: r.name = a0.name + "_par_" + a1.name; break;
    case ComposeOp::Conjunction: r.name = a0.name + "_and_" + a1.name; break;
    case ComposeOp::Disjunction: r.name = a0.name + "_or_" + a1.name; break;
    case ComposeOp::Quotient: r.name = a0.name + "_quot_" + a1.name; break;
  }
  return r;
}

Automaton mirror(const Automaton& a) {
  if (auto w = nondeterminism_witness(a))
    throw std::invalid_argument("mirror needs a deterministic automaton (ambiguous '" +
                                a.actions[w->action] + "' at " + a.locations[w->location] + ")");
  RegionCache cache(a);
  int n = a.num_clocks();
  Automaton out;
  out.name = a.name + "_mirror";
  out.description = a.description;
  out.clocks = a.clocks;
  out.actions = a.output_names();
  for (const auto& i : a.input_names()) out.actions.push_back(i);
  out.num_inputs = a.num_actions() - a.num_inputs;
  out.initial = a.initial;

  // Delay roles swap: the old timestop region becomes the new shadow and vice
  // versa, while the alive region is preserved. Encoded as inv = complement of
  // the new timestop region, coinv = complement of the new shadow.
  for (int l = 0; l < a.num_locations(); ++l) {
    const LocationRegions& r = cache.regions(l);
    out.locations.push_back(a.locations[l]);
    out.invariants.push_back(zl_to_constraint(zl_union(r.alive, r.top)));
    out.co_invariants.push_back(zl_to_constraint(zl_union(r.alive, r.shadow)));
  }

  int bot_id = -1, top_id = -1;
  auto bot_sink = [&]() {
    if (bot_id < 0) {
      std::string name = "BOT";
      while (out.location_id(name)) name += "_";
      out.locations.push_back(name);
      out.invariants.push_back(Constraint::truth());
      out.co_invariants.push_back(Constraint::falsity());
      bot_id = out.num_locations() - 1;
    }
    return bot_id;
  };
  auto top_sink = [&]() {
    if (top_id < 0) {
      std::string name = "TOP";
      while (out.location_id(name)) name += "_";
      out.locations.push_back(name);
      out.invariants.push_back(Constraint::falsity());
      out.co_invariants.push_back(Constraint::truth());
      top_id = out.num_locations() - 1;
    }
    return top_id;
  };

  // Transitions split by their original target class; error and magic entries
  // change places. Implicit completions swap on their own once the action
  // roles are interchanged.
  for (int ti = 0; ti < static_cast<int>(a.transitions.size()); ++ti) {
    const Transition& t = a.transitions[ti];
    int ca = *out.action_id(a.actions[t.action]);
    const ZoneList& guard = cache.guard_zones(ti);
    const LocationRegions& tgt = cache.regions(t.to);
    auto emit = [&](const ZoneList& target_region, int to, bool keep_resets) {
      ZoneList piece = zl_intersect(guard, zl_pre_reset(target_region, t.resets));
      if (zl_empty(piece)) return;
      Transition nt;
      nt.from = t.from;
      nt.action = ca;
      nt.guard = zl_to_constraint(piece);
      if (keep_resets) nt.resets = t.resets;
      nt.to = to;
      out.transitions.push_back(std::move(nt));
    };
    emit(tgt.alive, t.to, true);
    // original error entries become magic, original magic entries become error
    ZoneList err = tgt.entry_err;
    if (!zl_empty(err)) emit(err, top_sink(), false);
    ZoneList magic = tgt.entry_magic;
    if (!zl_empty(magic)) emit(magic, bot_sink(), false);
  }
  (void)n;
  return out;
}

}  // namespace tspec
