#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gkz {

using Int = std::int64_t;

/// A point of Z^n: a parameter beta, a gamma, a twist e, or a digit image gamma_k.
using LatticeVector = std::vector<Int>;

/// A point of N^N indexing the monomial lambda^u.
using ExponentVector = std::vector<Int>;

/// An element of the relation lattice L (entries of either sign).
using RelationVector = std::vector<Int>;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed or inconsistent input (dimension mismatch, bad modulus, precondition violated).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounded search ran out of budget before it could decide.
class CapExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check between two independent computations disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string to_string(const std::vector<Int>& v);

}  // namespace gkz
