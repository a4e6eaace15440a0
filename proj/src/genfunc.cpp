#include "strippaths/genfunc.hpp"

#include <stdexcept>
#include <string>

namespace strippaths {

namespace {

void require_half_width(int k) {
    if (k < 1) throw std::invalid_argument("half-width must be >= 1, got " + std::to_string(k));
}

}  // namespace

IntPolynomial det_poly(std::size_t j) {
    IntPolynomial prev = IntPolynomial::constant(1);  // d_0
    IntPolynomial cur = IntPolynomial::constant(1);   // d_1
    if (j == 0) return prev;
    for (std::size_t i = 2; i <= j; ++i) {
        IntPolynomial next = cur - prev.shifted(2);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

TruncatedSeries phi0_series(int k, std::size_t order) {
    require_half_width(k);
    const auto dk = det_poly(static_cast<std::size_t>(k));
    const auto denom = det_poly(2 * static_cast<std::size_t>(k) + 1);
    return TruncatedSeries(dk * dk, order) * TruncatedSeries(denom, order).reciprocal();
}

TruncatedSeries psi_series(int k, int j, std::size_t order) {
    require_half_width(k);
    if (j < 0 || j > 2 * k) {
        throw std::invalid_argument("end height " + std::to_string(j) + " outside 0.." + std::to_string(2 * k));
    }
    const auto numer = det_poly(static_cast<std::size_t>(2 * k - j)).shifted(static_cast<std::size_t>(j));
    const auto denom = det_poly(2 * static_cast<std::size_t>(k) + 1);
    return TruncatedSeries(numer, order) * TruncatedSeries(denom, order).reciprocal();
}

bool verify_dsum_identity(int k) {
    require_half_width(k);
    const auto uk = static_cast<std::size_t>(k);
    IntPolynomial sum;
    for (std::size_t j = 0; j <= uk; ++j) sum += det_poly(2 * uk - 2 * j).shifted(2 * j);
    const auto dk = det_poly(uk);
    return sum == dk * dk;
}

bool verify_v_identity(int k) {
    require_half_width(k);
    const auto uk = static_cast<std::size_t>(k);
    IntPolynomial geometric;
    for (std::size_t j = 0; j <= uk; ++j) geometric += IntPolynomial::monomial(2 * j);
    const IntPolynomial lhs = (IntPolynomial{1} - IntPolynomial::monomial(2 * uk + 2)) * geometric;
    IntPolynomial rhs;
    for (std::size_t j = 0; j <= uk; ++j) {
        rhs += IntPolynomial::monomial(2 * j);
        rhs -= IntPolynomial::monomial(4 * uk - 2 * j + 2);
    }
    return lhs == rhs;
}

bool verify_d_closed_form(std::size_t j) {
    // (1+v^2)^j * sum_i c_i (v/(1+v^2))^i = sum_i c_i v^i (1+v^2)^{j-i}; deg d_j <= j.
    const IntPolynomial one_plus_v2{1, 0, 1};
    const auto d = det_poly(j);
    IntPolynomial cleared;
    const auto& c = d.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        cleared += IntPolynomial::monomial(i, c[i]) * one_plus_v2.pow(static_cast<unsigned>(j - i));
    }
    const IntPolynomial lhs = cleared * IntPolynomial{1, 0, -1};
    const IntPolynomial rhs = IntPolynomial{1} - IntPolynomial::monomial(2 * j + 2);
    return lhs == rhs;
}

}  // namespace strippaths
