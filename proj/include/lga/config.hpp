#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace lga {

// Resource limits shared by the combinatorial and linear-algebra kernels.
// Exceeding a cap raises CapExceeded; callers are expected to shrink the
// instance rather than wait out an infeasible computation.
struct Caps {
  std::size_t ambient_cap = 2'000'000;  // max coordinates of a word component
  std::size_t path_cap = 100'000;       // max enumerated paths per query
  std::size_t lattice_cap = 5'000;      // max elements of a lattice closure
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, std::size_t limit, std::size_t required)
      : std::runtime_error("cap exceeded: " + cap_name + " (limit " +
                           std::to_string(limit) + ", required " +
                           std::to_string(required) + ")"),
        cap_name_(std::move(cap_name)),
        limit_(limit),
        required_(required) {}

  const std::string& cap_name() const { return cap_name_; }
  std::size_t limit() const { return limit_; }
  std::size_t required() const { return required_; }

 private:
  std::string cap_name_;
  std::size_t limit_;
  std::size_t required_;
};

// Raised when a graph file cannot be read as the line-oriented text format.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised by operations whose hypotheses require a uniform graph.  Carries
// one offending vertex together with two of its inequivalent children.
class NonUniformError : public std::runtime_error {
 public:
  NonUniformError(std::string v, std::string u, std::string w)
      : std::runtime_error("graph is not uniform: children " + u + " and " + w +
                           " of " + v + " are not equivalent"),
        v_(std::move(v)),
        u_(std::move(u)),
        w_(std::move(w)) {}

  const std::string& v() const { return v_; }
  const std::string& u() const { return u_; }
  const std::string& w() const { return w_; }

 private:
  std::string v_, u_, w_;
};

}  // namespace lga
