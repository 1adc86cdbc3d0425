#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace invpat {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n

}  // namespace invpat
