#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tspec/automaton.hpp"

namespace tspec {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line(line),
        column(column) {}
};

// A spec file holds named automata.
//
//   automaton sched {
//     clocks x;
//     inputs finish;
//     outputs start;
//     location A init [inv: x<=100] { on start reset {x} goto B; }
//     location B { on finish [guard: x>=5 && x<=8] goto A; }
//   }
struct SpecFile {
  std::vector<Automaton> automata;

  const Automaton* find(const std::string& name) const;
};

SpecFile parse_spec(const std::string& text);

std::string print_constraint(const Constraint& c, const std::vector<std::string>& clock_names);
std::string print_automaton(const Automaton& a);
std::string print_spec(const SpecFile& f);

std::string to_dot(const Automaton& a);

}  // namespace tspec
