#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dlat {

/** Base class of every error thrown by this library. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input relation contains a directed cycle.
struct CycleDetected : Error {
  std::vector<std::string> witness;  // element names on or feeding the cycle
  explicit CycleDetected(std::vector<std::string> w)
      : Error("cycle detected through: " + join(w)), witness(std::move(w)) {}

private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += ' ';
      s += x;
    }
    return s;
  }
};

struct DuplicateName : Error {
  std::string name;
  explicit DuplicateName(std::string n)
      : Error("duplicate element name: " + n), name(std::move(n)) {}
};

/// Some pair has no least upper bound or no greatest lower bound.
struct NotALattice : Error {
  std::string a, b;
  NotALattice(std::string a_, std::string b_)
      : Error("no unique lub/glb for pair: " + a_ + " " + b_),
        a(std::move(a_)),
        b(std::move(b_)) {}
};

/// Witness triple violating a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c).
struct NotDistributive : Error {
  std::string a, b, c;
  NotDistributive(std::string a_, std::string b_, std::string c_)
      : Error("distributive law fails on triple: " + a_ + " " + b_ + " " + c_),
        a(std::move(a_)),
        b(std::move(b_)),
        c(std::move(c_)) {}
};

struct NotACover : Error {
  NotACover(const std::string& upper, const std::string& lower)
      : Error(upper + " does not cover " + lower) {}
};

struct NotMaximalJoinIrreducible : Error {
  explicit NotMaximalJoinIrreducible(const std::string& name)
      : Error(name + " is not a maximal nonzero join irreducible") {}
};

struct SizeLimitExceeded : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct UnknownDirective : ParseError {
  UnknownDirective(int line_, const std::string& directive)
      : ParseError(line_, "unknown directive: " + directive) {}
};

/** A proved theorem failed at runtime. Always an implementation bug,
    never a property of the input. */
struct TheoremViolation : Error {
  using Error::Error;
};

}  // namespace dlat
