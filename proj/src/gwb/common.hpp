#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwb {

using Integer = mpz_class;
using Rational = mpq_class;

/// A tuple of positive integers: fiber sizes, excisiveness profiles, cube coordinates.
using Tuple = std::vector<int>;

/// Raised when caller-supplied data violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internally computed object fails a self-check. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string to_string(const Tuple& t);
Tuple parse_tuple(const std::string& text);

int tuple_sum(const Tuple& t);

inline void require(bool cond, const std::string& message) {
  if (!cond) throw InvalidInput(message);
}

}  // namespace gwb
