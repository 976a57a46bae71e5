#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace abelrep {

// Arbitrary-precision signed integer used throughout the library.
using Int = boost::multiprecision::cpp_int;

}  // namespace abelrep
