#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tambcat {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Canonical "num/den" form with explicit sign on the numerator; "3" for integers.
std::string rational_to_string(const Rational& r);

// Accepts "n", "-n", "n/d"; the parsed value is normalized by cpp_rational.
Rational rational_from_string(const std::string& s);

struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& msg) : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace tambcat
