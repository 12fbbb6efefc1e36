#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace thomschur {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

} // namespace thomschur
