#pragma once

#include <cstddef>

#include "strippaths/polynomial.hpp"

namespace strippaths {

/// Determinant of the j x j tridiagonal matrix with 1 on the diagonal and -z beside it:
/// d_0 = d_1 = 1, d_j = d_{j-1} - z^2 d_{j-2}.
IntPolynomial det_poly(std::size_t j);

/// d_k^2 / d_{2k+1} to the given order. The z^{2n} coefficient counts walks from 0 to 0
/// inside -k..k; odd coefficients vanish.
TruncatedSeries phi0_series(int k, std::size_t order);

/// z^j d_{2k-j} / d_{2k+1}: walks inside 0..2k that start at 0 and end at j.
TruncatedSeries psi_series(int k, int j, std::size_t order);

/// sum_{j=0..k} z^{2j} d_{2k-2j} == d_k^2.
bool verify_dsum_identity(int k);

/// (1 - v^{2k+2}) (1 + v^2 + ... + v^{2k}) == sum_{j=0..k} (v^{2j} - v^{4k-2j+2}).
bool verify_v_identity(int k);

/// (1 + v^2)^j d_j(v / (1 + v^2)) (1 - v^2) == 1 - v^{2j+2}, denominators cleared.
bool verify_d_closed_form(std::size_t j);

}  // namespace strippaths
