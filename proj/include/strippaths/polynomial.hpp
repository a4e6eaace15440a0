#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "strippaths/counting.hpp"

namespace strippaths {

using BigInt = boost::multiprecision::cpp_int;

/// Exact univariate polynomial with big-integer coefficients, index = degree.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long long> coefficients);

    static IntPolynomial constant(BigInt c);
    /// c * x^degree
    static IntPolynomial monomial(std::size_t degree, BigInt c = 1);

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long long degree() const noexcept { return static_cast<long long>(coeffs_.size()) - 1; }
    BigInt coefficient(std::size_t degree) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator-(IntPolynomial a);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    IntPolynomial pow(unsigned exponent) const;
    /// Multiply by x^n.
    IntPolynomial shifted(std::size_t n) const;

    /// e.g. "1 - 3z^2 + z^4".
    std::string to_string(char var = 'z') const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Power series known modulo z^(order+1). Storage always holds order+1 coefficients.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    TruncatedSeries(const IntPolynomial& p, std::size_t order);

    std::size_t order() const noexcept { return order_; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    const BigInt& operator[](std::size_t degree) const { return coeffs_.at(degree); }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    /// Product truncated to the smaller of the two orders.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// Multiplicative inverse; the constant term must be +1 or -1 so the result stays integral.
    TruncatedSeries reciprocal() const;

private:
    std::size_t order_;
    std::vector<BigInt> coeffs_;
};

}  // namespace strippaths
