#include "tspec/textio.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace tspec {

const Automaton* SpecFile::find(const std::string& name) const {
  for (const auto& a : automata)
    if (a.name == name) return &a;
  return nullptr;
}

namespace {

struct Token {
  enum Kind { Ident, Number, Symbol, String, End } kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_ = {Token::End, "", line_, col_};
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        s += get();
      tok_ = {Token::Ident, s, tok_.line, tok_.col};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) s += get();
      tok_ = {Token::Number, s, tok_.line, tok_.col};
      return;
    }
    if (c == '"') {
      get();
      std::string s;
      while (pos_ < src_.size() && src_[pos_] != '"') s += get();
      if (pos_ >= src_.size()) throw ParseError("unterminated string", tok_.line, tok_.col);
      get();
      tok_ = {Token::String, s, tok_.line, tok_.col};
      return;
    }
    static const char* two[] = {"<=", ">=", "==", "&&", "||"};
    for (const char* t : two) {
      if (src_.compare(pos_, 2, t) == 0) {
        get();
        get();
        tok_ = {Token::Symbol, t, tok_.line, tok_.col};
        return;
      }
    }
    std::string s(1, get());
    tok_ = {Token::Symbol, s, tok_.line, tok_.col};
  }

  void skip_space() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) get();
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') get();
        continue;
      }
      if (pos_ < src_.size() && src_[pos_] == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') get();
        continue;
      }
      break;
    }
  }

  char get() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  SpecFile parse_file() {
    SpecFile f;
    std::map<std::string, bool> names;
    while (lex_.peek().kind != Token::End) {
      expect_ident("automaton");
      Automaton a = parse_automaton();
      if (names.count(a.name)) err("duplicate automaton name '" + a.name + "'");
      names[a.name] = true;
      auto issues = validate(a);
      if (!issues.empty()) err("validation failed for '" + a.name + "': " + issues.front());
      f.automata.push_back(std::move(a));
    }
    return f;
  }

 private:
  [[noreturn]] void err(const std::string& m) { throw ParseError(m, lex_.peek().line, lex_.peek().col); }

  std::string expect(Token::Kind k, const std::string& what) {
    if (lex_.peek().kind != k) err("expected " + what + ", found '" + lex_.peek().text + "'");
    return lex_.take().text;
  }

  void expect_sym(const std::string& s) {
    if (lex_.peek().kind != Token::Symbol || lex_.peek().text != s)
      err("expected '" + s + "', found '" + lex_.peek().text + "'");
    lex_.take();
  }

  void expect_ident(const std::string& s) {
    if (lex_.peek().kind != Token::Ident || lex_.peek().text != s)
      err("expected '" + s + "', found '" + lex_.peek().text + "'");
    lex_.take();
  }

  bool peek_ident(const std::string& s) {
    return lex_.peek().kind == Token::Ident && lex_.peek().text == s;
  }

  std::vector<std::string> ident_list_until_semicolon() {
    std::vector<std::string> out;
    if (lex_.peek().kind == Token::Symbol && lex_.peek().text == ";") {
      lex_.take();
      return out;
    }
    for (;;) {
      out.push_back(expect(Token::Ident, "identifier"));
      if (lex_.peek().kind == Token::Symbol && lex_.peek().text == ",") {
        lex_.take();
        continue;
      }
      expect_sym(";");
      return out;
    }
  }

  Automaton parse_automaton() {
    Automaton a;
    a.name = expect(Token::Ident, "automaton name");
    expect_sym("{");
    std::vector<std::string> inputs, outputs;
    bool saw_init = false;
    struct PendingEdge {
      std::string from, action, to;
      Constraint guard = Constraint::truth();
      std::vector<std::string> resets;
      int line, col;
    };
    std::vector<PendingEdge> edges;
    struct PendingLoc {
      std::string name;
      Constraint inv = Constraint::truth();
      Constraint coinv = Constraint::truth();
    };
    std::vector<PendingLoc> locs;
    std::string init_name;

    while (!(lex_.peek().kind == Token::Symbol && lex_.peek().text == "}")) {
      if (peek_ident("clocks")) {
        lex_.take();
        for (auto& c : ident_list_until_semicolon()) a.clocks.push_back(c);
      } else if (peek_ident("inputs")) {
        lex_.take();
        for (auto& c : ident_list_until_semicolon()) inputs.push_back(c);
      } else if (peek_ident("outputs")) {
        lex_.take();
        for (auto& c : ident_list_until_semicolon()) outputs.push_back(c);
      } else if (peek_ident("description")) {
        lex_.take();
        a.description = expect(Token::String, "string");
        expect_sym(";");
      } else if (peek_ident("location")) {
        lex_.take();
        PendingLoc l;
        l.name = expect(Token::Ident, "location name");
        if (peek_ident("init")) {
          lex_.take();
          if (saw_init) err("multiple init locations");
          saw_init = true;
          init_name = l.name;
        }
        while (lex_.peek().kind == Token::Symbol && lex_.peek().text == "[") {
          lex_.take();
          if (peek_ident("inv")) {
            lex_.take();
            expect_sym(":");
            l.inv = parse_constraint(a);
          } else if (peek_ident("coinv")) {
            lex_.take();
            expect_sym(":");
            l.coinv = parse_constraint(a);
          } else {
            err("expected 'inv' or 'coinv'");
          }
          expect_sym("]");
        }
        expect_sym("{");
        while (!(lex_.peek().kind == Token::Symbol && lex_.peek().text == "}")) {
          PendingEdge e;
          e.line = lex_.peek().line;
          e.col = lex_.peek().col;
          expect_ident("on");
          e.from = l.name;
          e.action = expect(Token::Ident, "action name");
          if (lex_.peek().kind == Token::Symbol && lex_.peek().text == "[") {
            lex_.take();
            expect_ident("guard");
            expect_sym(":");
            e.guard = parse_constraint(a);
            expect_sym("]");
          }
          if (peek_ident("reset")) {
            lex_.take();
            expect_sym("{");
            if (!(lex_.peek().kind == Token::Symbol && lex_.peek().text == "}")) {
              for (;;) {
                e.resets.push_back(expect(Token::Ident, "clock name"));
                if (lex_.peek().kind == Token::Symbol && lex_.peek().text == ",") {
                  lex_.take();
                  continue;
                }
                break;
              }
            }
            expect_sym("}");
          }
          expect_ident("goto");
          e.to = expect(Token::Ident, "location name");
          expect_sym(";");
          edges.push_back(std::move(e));
        }
        expect_sym("}");
        locs.push_back(std::move(l));
      } else {
        err("expected declaration or location");
      }
    }
    expect_sym("}");

    if (locs.empty()) err("automaton '" + a.name + "' has no locations");
    for (const auto& i : inputs) a.actions.push_back(i);
    a.num_inputs = static_cast<int>(inputs.size());
    for (const auto& o : outputs) a.actions.push_back(o);
    for (const auto& l : locs) {
      a.locations.push_back(l.name);
      a.invariants.push_back(l.inv);
      a.co_invariants.push_back(l.coinv);
    }
    if (!saw_init) err("automaton '" + a.name + "' has no init location");
    a.initial = static_cast<int>(*a.location_id(init_name));
    for (const auto& e : edges) {
      Transition t;
      auto from = a.location_id(e.from);
      auto to = a.location_id(e.to);
      auto act = a.action_id(e.action);
      if (!from) throw ParseError("unknown location '" + e.from + "'", e.line, e.col);
      if (!to) throw ParseError("unknown location '" + e.to + "'", e.line, e.col);
      if (!act) throw ParseError("action '" + e.action + "' not in alphabet", e.line, e.col);
      t.from = static_cast<int>(*from);
      t.to = static_cast<int>(*to);
      t.action = static_cast<int>(*act);
      t.guard = e.guard;
      for (const auto& rn : e.resets) {
        auto c = a.clock_id(rn);
        if (!c) throw ParseError("reset of undeclared clock '" + rn + "'", e.line, e.col);
        t.resets.push_back(static_cast<int>(*c));
      }
      a.transitions.push_back(std::move(t));
    }
    return a;
  }

  Constraint parse_constraint(const Automaton& a) { return parse_disj(a); }

  Constraint parse_disj(const Automaton& a) {
    Constraint c = parse_conj(a);
    while (lex_.peek().kind == Token::Symbol && lex_.peek().text == "||") {
      lex_.take();
      c = Constraint::disj(c, parse_conj(a));
    }
    return c;
  }

  Constraint parse_conj(const Automaton& a) {
    Constraint c = parse_unary(a);
    while (lex_.peek().kind == Token::Symbol && lex_.peek().text == "&&") {
      lex_.take();
      c = Constraint::conj(c, parse_unary(a));
    }
    return c;
  }

  Constraint parse_unary(const Automaton& a) {
    if (lex_.peek().kind == Token::Symbol && lex_.peek().text == "!") {
      lex_.take();
      return Constraint::negate(parse_unary(a));
    }
    if (lex_.peek().kind == Token::Symbol && lex_.peek().text == "(") {
      lex_.take();
      Constraint c = parse_disj(a);
      expect_sym(")");
      return c;
    }
    if (peek_ident("true")) {
      lex_.take();
      return Constraint::truth();
    }
    if (peek_ident("false")) {
      lex_.take();
      return Constraint::falsity();
    }
    // atom: clock [- clock] cmp number
    std::string x = expect(Token::Ident, "clock name");
    auto cx = a.clock_id(x);
    if (!cx) err("undeclared clock '" + x + "'");
    Atom atom;
    atom.lhs = static_cast<int>(*cx);
    if (lex_.peek().kind == Token::Symbol && lex_.peek().text == "-") {
      lex_.take();
      std::string y = expect(Token::Ident, "clock name");
      auto cy = a.clock_id(y);
      if (!cy) err("undeclared clock '" + y + "'");
      atom.rhs = static_cast<int>(*cy);
    }
    std::string op = expect(Token::Symbol, "comparison");
    if (op == "<=") atom.op = CmpOp::Le;
    else if (op == "<") atom.op = CmpOp::Lt;
    else if (op == "==" || op == "=") atom.op = CmpOp::Eq;
    else if (op == ">=") atom.op = CmpOp::Ge;
    else if (op == ">") atom.op = CmpOp::Gt;
    else err("unknown comparison '" + op + "'");
    atom.constant = std::stoi(expect(Token::Number, "natural constant"));
    return Constraint::atom(atom);
  }

  Lexer lex_;
};

std::string print_constraint_rec(const Constraint& c, const std::vector<std::string>& names,
                                 int parent_prec) {
  using K = Constraint::Kind;
  switch (c.kind()) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Atom: {
      const Atom& a = c.atom_value();
      std::string s = names[a.lhs];
      if (a.rhs >= 0) s += "-" + names[a.rhs];
      return s + cmp_to_string(a.op) + std::to_string(a.constant);
    }
    case K::Not: return "!(" + print_constraint_rec(c.child(0), names, 0) + ")";
    case K::And: {
      std::string s = print_constraint_rec(c.child(0), names, 2) + " && " +
                      print_constraint_rec(c.child(1), names, 2);
      return parent_prec > 1 ? "(" + s + ")" : s;
    }
    case K::Or: {
      std::string s = print_constraint_rec(c.child(0), names, 1) + " || " +
                      print_constraint_rec(c.child(1), names, 1);
      return parent_prec > 0 ? "(" + s + ")" : s;
    }
  }
  return "true";
}

}  // namespace

SpecFile parse_spec(const std::string& text) { return Parser(text).parse_file(); }

std::string print_constraint(const Constraint& c, const std::vector<std::string>& clock_names) {
  return print_constraint_rec(c, clock_names, 0);
}

std::string print_automaton(const Automaton& a) {
  std::ostringstream os;
  os << "automaton " << a.name << " {\n";
  if (!a.description.empty()) os << "  description \"" << a.description << "\";\n";
  auto list = [&](const char* kw, const std::vector<std::string>& xs) {
    os << "  " << kw << " ";
    for (size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
    os << ";\n";
  };
  if (!a.clocks.empty()) list("clocks", a.clocks);
  if (a.num_inputs > 0) list("inputs", a.input_names());
  if (a.num_actions() > a.num_inputs) list("outputs", a.output_names());
  for (int l = 0; l < a.num_locations(); ++l) {
    os << "  location " << a.locations[l];
    if (l == a.initial) os << " init";
    if (!a.invariants[l].is_true())
      os << " [inv: " << print_constraint(a.invariants[l], a.clocks) << "]";
    if (!a.co_invariants[l].is_true())
      os << " [coinv: " << print_constraint(a.co_invariants[l], a.clocks) << "]";
    os << " {\n";
    for (const auto& t : a.transitions) {
      if (t.from != l) continue;
      os << "    on " << a.actions[t.action];
      if (!t.guard.is_true()) os << " [guard: " << print_constraint(t.guard, a.clocks) << "]";
      if (!t.resets.empty()) {
        os << " reset {";
        for (size_t i = 0; i < t.resets.size(); ++i)
          os << (i ? ", " : "") << a.clocks[t.resets[i]];
        os << "}";
      }
      os << " goto " << a.locations[t.to] << ";\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string print_spec(const SpecFile& f) {
  std::string out;
  for (const auto& a : f.automata) {
    if (!out.empty()) out += "\n";
    out += print_automaton(a);
  }
  return out;
}

std::string to_dot(const Automaton& a) {
  RegionCache cache(a);
  std::ostringstream os;
  os << "digraph \"" << a.name << "\" {\n  rankdir=LR;\n  node [shape=ellipse];\n";
  os << "  __init [shape=point];\n";
  for (int l = 0; l < a.num_locations(); ++l) {
    bool bot_like = zl_empty(cache.regions(l).alive) && zl_empty(cache.regions(l).top);
    bool top_like = zl_empty(cache.regions(l).alive) && zl_empty(cache.regions(l).shadow);
    os << "  L" << l << " [label=\"" << a.locations[l];
    if (!a.invariants[l].is_true()) os << "\\ninv: " << print_constraint(a.invariants[l], a.clocks);
    if (!a.co_invariants[l].is_true())
      os << "\\ncoinv: " << print_constraint(a.co_invariants[l], a.clocks);
    os << "\"";
    if (bot_like) os << ", shape=doublecircle, style=filled, fillcolor=\"#ffbbbb\"";
    else if (top_like) os << ", shape=doublecircle, style=filled, fillcolor=\"#bbbbff\"";
    os << "];\n";
  }
  os << "  __init -> L" << a.initial << ";\n";
  for (const auto& t : a.transitions) {
    os << "  L" << t.from << " -> L" << t.to << " [label=\"" << a.actions[t.action]
       << (a.is_input(t.action) ? "?" : "!");
    if (!t.guard.is_true()) os << "\\n[" << print_constraint(t.guard, a.clocks) << "]";
    if (!t.resets.empty()) {
      os << "\\nreset {";
      for (size_t i = 0; i < t.resets.size(); ++i) os << (i ? "," : "") << a.clocks[t.resets[i]];
      os << "}";
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tspec
