#pragma once

// Exact scalar types shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spherical {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& n) { return n.str(); }
std::string to_string(const Rational& r);

// Parses "3", "-1/2", "0.5" style input; throws InvalidInput on junk.
Rational parse_rational(const std::string& text);

inline double to_double(const BigInt& n) { return n.convert_to<double>(); }
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a graded product or inversion would need grades that the
// inputs do not carry.
struct WindowError : std::logic_error {
  using std::logic_error::logic_error;
};

struct CapExceeded : std::length_error {
  using std::length_error::length_error;
};

}  // namespace spherical
