#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tspec/rational.hpp"

namespace tspec {

// Canonical timed word: alternating positive reals and action names with no
// two adjacent reals. The builder coalesces adjacent delays and drops zeros.
class TimedWord {
 public:
  using Element = std::variant<Rational, std::string>;

  TimedWord() = default;

  static TimedWord delay(const Rational& d);
  static TimedWord action(const std::string& a);

  void append_delay(const Rational& d);
  void append_action(const std::string& a);

  const std::vector<Element>& elements() const { return elems_; }
  bool empty() const { return elems_.empty(); }
  size_t size() const { return elems_.size(); }

  // Total elapsed time: the sum of all reals.
  Rational length() const;
  int action_count() const;

  TimedWord concat(const TimedWord& other) const;
  // Drops actions outside the sub-alphabet, coalescing the freed-up delays.
  TimedWord project(const std::vector<std::string>& alphabet) const;

  bool is_prefix_of(const TimedWord& other) const;
  bool is_strict_prefix_of(const TimedWord& other) const;
  std::vector<TimedWord> prefixes(const Rational& grid) const;  // grid-aligned prefixes

  std::string to_string() const;
  bool operator==(const TimedWord& o) const { return elems_ == o.elems_; }
  bool operator<(const TimedWord& o) const;

 private:
  std::vector<Element> elems_;
};

}  // namespace tspec
