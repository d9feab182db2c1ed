#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace majordex {

// Arbitrary-precision signed integer used for every coefficient.
using Integer = boost::multiprecision::cpp_int;

} // namespace majordex
