#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mcv {
using Rational = boost::multiprecision::cpp_rational;
}
