#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace cycpat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a quantity that must clear to an exact integer does not.
struct ExactnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an enumeration request exceeds the configured caps.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigInt factorial(int n);
BigInt binomial(int n, int k);

} // namespace cycpat
