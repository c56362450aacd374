#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symq {

// Bad caller input: malformed tables, non-units, closure violations, etc.
// The CLI maps these to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_order_error : input_error {
  using input_error::input_error;
};

struct not_a_unit_error : input_error {
  using input_error::input_error;
};

// Table of the wrong shape or an out-of-range element index.
struct shape_error : input_error {
  using input_error::input_error;
};

// A set that was required to be closed (under s_x, mul, ...) is not.
struct closure_error : input_error {
  using input_error::input_error;
};

// Input outside the operation's mathematical domain (e.g. non-abelian
// group passed to an Alexander constructor).
struct domain_error : input_error {
  using input_error::input_error;
};

// Precondition on object state violated (e.g. unverified GroupMap where a
// verified automorphism is required).
struct contract_error : input_error {
  using input_error::input_error;
};

// A search exceeded its node, time, or size budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two routes that must agree did not. Exit code 3 in the CLI.
struct inconsistency_error : std::runtime_error {
  inconsistency_error(std::uint64_t brute, std::uint64_t theorem,
                      const std::string& what)
      : std::runtime_error(what), brute_count(brute), theorem_count(theorem) {}
  std::uint64_t brute_count;
  std::uint64_t theorem_count;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace symq
