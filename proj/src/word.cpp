#include "tspec/word.hpp"

#include <algorithm>
#include <sstream>

namespace tspec {

TimedWord TimedWord::delay(const Rational& d) {
  TimedWord w;
  w.append_delay(d);
  return w;
}

TimedWord TimedWord::action(const std::string& a) {
  TimedWord w;
  w.append_action(a);
  return w;
}

void TimedWord::append_delay(const Rational& d) {
  if (d == Rational(0)) return;
  if (!elems_.empty() && std::holds_alternative<Rational>(elems_.back())) {
    elems_.back() = std::get<Rational>(elems_.back()) + d;
    return;
  }
  elems_.push_back(d);
}

void TimedWord::append_action(const std::string& a) { elems_.push_back(a); }

Rational TimedWord::length() const {
  Rational sum(0);
  for (const auto& e : elems_)
    if (std::holds_alternative<Rational>(e)) sum += std::get<Rational>(e);
  return sum;
}

int TimedWord::action_count() const {
  int k = 0;
  for (const auto& e : elems_)
    if (std::holds_alternative<std::string>(e)) ++k;
  return k;
}

TimedWord TimedWord::concat(const TimedWord& other) const {
  TimedWord w = *this;
  for (const auto& e : other.elems_) {
    if (std::holds_alternative<Rational>(e)) w.append_delay(std::get<Rational>(e));
    else w.append_action(std::get<std::string>(e));
  }
  return w;
}

TimedWord TimedWord::project(const std::vector<std::string>& alphabet) const {
  TimedWord w;
  for (const auto& e : elems_) {
    if (std::holds_alternative<Rational>(e)) {
      w.append_delay(std::get<Rational>(e));
    } else {
      const std::string& a = std::get<std::string>(e);
      if (std::find(alphabet.begin(), alphabet.end(), a) != alphabet.end()) w.append_action(a);
    }
  }
  return w;
}

bool TimedWord::is_prefix_of(const TimedWord& other) const {
  if (elems_.size() > other.elems_.size()) return false;
  for (size_t i = 0; i < elems_.size(); ++i) {
    bool last = (i + 1 == elems_.size());
    if (std::holds_alternative<Rational>(elems_[i])) {
      if (!std::holds_alternative<Rational>(other.elems_[i])) return false;
      Rational mine = std::get<Rational>(elems_[i]);
      Rational theirs = std::get<Rational>(other.elems_[i]);
      if (last ? mine > theirs : mine != theirs) return false;
    } else {
      if (elems_[i] != other.elems_[i]) return false;
    }
  }
  return true;
}

bool TimedWord::is_strict_prefix_of(const TimedWord& other) const {
  return is_prefix_of(other) && !(*this == other);
}

std::vector<TimedWord> TimedWord::prefixes(const Rational& grid) const {
  std::vector<TimedWord> out;
  TimedWord cur;
  out.push_back(cur);
  for (const auto& e : elems_) {
    if (std::holds_alternative<Rational>(e)) {
      Rational d = std::get<Rational>(e);
      Rational step = grid;
      while (step < d) {
        out.push_back(cur.concat(TimedWord::delay(step)));
        step += grid;
      }
      cur.append_delay(d);
      out.push_back(cur);
    } else {
      cur.append_action(std::get<std::string>(e));
      out.push_back(cur);
    }
  }
  // drop the duplicate of the full word when it coincides with a mid cut
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string TimedWord::to_string() const {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ",";
    if (std::holds_alternative<Rational>(elems_[i]))
      os << format_rational(std::get<Rational>(elems_[i]));
    else
      os << std::get<std::string>(elems_[i]);
  }
  os << ">";
  return os.str();
}

bool TimedWord::operator<(const TimedWord& o) const {
  size_t n = std::min(elems_.size(), o.elems_.size());
  for (size_t i = 0; i < n; ++i) {
    const auto& a = elems_[i];
    const auto& b = o.elems_[i];
    if (a.index() != b.index()) return a.index() < b.index();
    if (std::holds_alternative<Rational>(a)) {
      const Rational &ra = std::get<Rational>(a), &rb = std::get<Rational>(b);
      if (ra != rb) return ra < rb;
    } else {
      const std::string &sa = std::get<std::string>(a), &sb = std::get<std::string>(b);
      if (sa != sb) return sa < sb;
    }
  }
  return elems_.size() < o.elems_.size();
}

}  // namespace tspec
