#include "strippaths/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace strippaths {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
    for (long long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt c) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::coefficient(std::size_t degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : BigInt(0);
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial operator-(IntPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

IntPolynomial IntPolynomial::shifted(std::size_t n) const {
    if (is_zero()) return {};
    std::vector<BigInt> v(n);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        const BigInt& c = coeffs_[d];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (d == 0 || mag != 1) os << mag;
        if (d >= 1) os << var;
        if (d >= 2) os << '^' << d;
    }
    return os.str();
}

TruncatedSeries::TruncatedSeries(std::size_t order) : order_(order), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(const IntPolynomial& p, std::size_t order) : TruncatedSeries(order) {
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i <= order && i < c.size(); ++i) coeffs_[i] = c[i];
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    if (rhs.order_ < order_) {
        order_ = rhs.order_;
        coeffs_.resize(order_ + 1);
    }
    for (std::size_t i = 0; i <= order_; ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order_, b.order_));
    for (std::size_t i = 0; i <= out.order_; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= out.order_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    const BigInt& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1) {
        throw std::domain_error("series reciprocal needs a unit constant term");
    }
    // r_0 = 1/c0, r_n = -(1/c0) * sum_{i=1..n} c_i r_{n-i}; 1/c0 == c0 for units.
    TruncatedSeries r(order_);
    r.coeffs_[0] = c0;
    for (std::size_t n = 1; n <= order_; ++n) {
        BigInt acc = 0;
        for (std::size_t i = 1; i <= n; ++i) acc += coeffs_[i] * r.coeffs_[n - i];
        r.coeffs_[n] = -c0 * acc;
    }
    return r;
}

}  // namespace strippaths
