#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cycinv {

// Exact coefficient arithmetic; no floating point anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace cycinv
