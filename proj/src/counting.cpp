#include "strippaths/counting.hpp"

#include <stdexcept>
#include <string>

namespace strippaths {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Fibonacci extended by the recurrence to F_0 = 0, F_{-1} = 1.
BigCount fib_extended(long long m) {
    if (m == -1) return 1;
    if (m == 0) return 0;
    BigCount prev = 0, cur = 1;
    for (long long i = 1; i < m; ++i) {
        BigCount next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

BigCount binomial(long long n, long long m) {
    if (n < 0 || m < 0 || m > n) return 0;
    if (m > n - m) m = n - m;
    BigCount r = 1;
    for (long long i = 1; i <= m; ++i) {
        r *= n - m + i;
        r /= i;
    }
    return r;
}

BigCount strip_count(std::size_t n, int k) {
    if (k < 1) throw std::invalid_argument("strip width must be >= 1, got " + std::to_string(k));
    const long long nn = static_cast<long long>(n);
    const long long period = k + 2;
    // Outside this window the binomial index leaves [0, n].
    const long long bound = (nn + period) / period;
    BigCount sum = 0;
    for (long long j = -bound; j <= bound; ++j) {
        BigCount term = binomial(nn, floor_div(nn + period * j, 2));
        if (j % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum;
}

BigCount fibonacci(long long m) {
    if (m < 1) throw std::invalid_argument("fibonacci index must be >= 1, got " + std::to_string(m));
    return fib_extended(m);
}

BigCount a3_binomial_sum(std::size_t n) {
    const long long nn = static_cast<long long>(n);
    BigCount sum = 0;
    for (long long i = 0; i <= nn / 2; ++i) sum += binomial(nn - i, i);
    return sum;
}

BigCount expected_subfamily_count(Family strip, std::size_t n, int h) {
    const long long half = static_cast<long long>(n / 2);
    const bool even = n % 2 == 0;
    auto reject = [&]() -> BigCount {
        throw std::invalid_argument("no width-3 " + std::string(1, family_letter(strip)) +
                                    "-strip subfamily of length " + std::to_string(n) +
                                    " ends at height " + std::to_string(h));
    };
    if (strip == Family::B) {
        if (even && h == 0) return fib_extended(2 * half - 1);
        if (even && h == 2) return fib_extended(2 * half);
        if (!even && h == 1) return fib_extended(2 * half + 1);
        if (!even && h == 3) return fib_extended(2 * half);
        return reject();
    }
    if (even && h == 0) return fib_extended(2 * half + 1);
    if (even && h == -2) return fib_extended(2 * half);
    if (!even && h == 1) return fib_extended(2 * half + 1);
    if (!even && h == -1) return fib_extended(2 * half + 2);
    return reject();
}

}  // namespace strippaths
