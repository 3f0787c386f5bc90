#pragma once

#include <functional>
#include <vector>

namespace cftail {

/// Real trigonometric polynomial
///   P(theta) = sum_j cos_coeffs[j] * cos(j*theta) + sum_j sin_coeffs[j] * sin(j*theta)
/// with sin_coeffs[0] ignored by construction (sin 0 = 0; the vector is
/// indexed from 1 conceptually but stored from 0 for uniformity).
struct TrigPoly {
    std::vector<double> cos_coeffs;  // a_0, a_1, ..., a_k
    std::vector<double> sin_coeffs;  // b_1, ..., b_k (stored at indices 0..k-1)
};

struct NonnegReport {
    double min_estimate = 0.0;
    bool ok = false;
};

/// Highest index with a nonzero coefficient (0 for the zero polynomial).
int degree(const TrigPoly& p);

double eval_poly(const TrigPoly& p, double theta);

/// Estimates min P over a period by dense sampling (1024*(degree+1) points on
/// [0, 2pi)) followed by golden-section refinement to width 1e-10 around the
/// grid minimum. ok = (min_estimate >= -tol). The polynomial is 2pi-periodic,
/// so one period decides global non-negativity.
NonnegReport check_nonnegative(const TrigPoly& p, double tol);

/// Cosine expansion of sin(theta)^(2k): a_0 = C(2k,k)/4^k and the coefficient
/// of cos(2(k-j)theta) equals 2*(-1)^(k-j)*C(2k,j)/4^k for j = 0..k-1; all sine
/// coefficients vanish. Valid for 1 <= k <= 15 where the binomials are exact
/// in double precision.
TrigPoly sin_power_coeffs(int k);

/// Central finite difference of order 2k at the origin with step u:
///   sum_{j=0}^{2k} (-1)^j C(2k,j) g((j-k)u).
double central_difference(const std::function<double(double)>& g, double u, int order2k);

/// Exact binomial coefficient as a double (n <= 30).
double binomial(int n, int r);

}  // namespace cftail
