#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "strippaths/path.hpp"

namespace strippaths {

/// Exact nonnegative count. Arbitrary precision, so nothing here overflows.
using BigCount = boost::multiprecision::cpp_int;

/// C(n, m), zero outside 0 <= m <= n.
BigCount binomial(long long n, long long m);

/// |A_{n,k}| = |B_{n,k}| as the alternating sum over j of (-1)^j C(n, floor((n + (k+2)j) / 2)).
BigCount strip_count(std::size_t n, int k);

/// F_1 = F_2 = 1. m = 0 is rejected.
BigCount fibonacci(long long m);

/// Sum over i <= n/2 of C(n - i, i), which equals F_{n+1}.
BigCount a3_binomial_sum(std::size_t n);

/// The closed Fibonacci value for a width-3 subfamily ending at height h:
///   B-strip: |B(2m,3|0)| = F_{2m-1}, |B(2m,3|2)| = F_{2m}, |B(2m+1,3|1)| = F_{2m+1},
///            |B(2m+1,3|3)| = F_{2m};
///   A-strip: |A(2m,3|0)| = F_{2m+1}, |A(2m,3|-2)| = F_{2m}, |A(2m+1,3|1)| = F_{2m+1},
///            |A(2m+1,3|-1)| = F_{2m+2}.
/// At length 0 the formulas read F_{-1} = 1 and F_0 = 0 through the recurrence.
/// Throws std::invalid_argument when h has the wrong parity or lies outside the strip.
BigCount expected_subfamily_count(Family strip, std::size_t n, int h);

}  // namespace strippaths
