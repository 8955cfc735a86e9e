#pragma once

#include <complex>
#include <vector>

#include "potts/exact.hpp"

namespace potts {

/// All complex roots, with multiplicity, of the polynomial with the given
/// coefficients (c[j] multiplies z^j). High-order zero coefficients are
/// stripped first; exact zeros at the origin are split off before the
/// eigenvalue solve. Each root is polished with one Newton step.
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs);

std::vector<cplx> roots_in_w(const CoeffVector& c);

/// |p(x)| scaled by sum_j |c_j| |x|^j; machine-precision roots land well
/// under 1e-8 on the degrees handled here.
double root_residual(const std::vector<cplx>& coeffs, cplx x);

} // namespace potts
