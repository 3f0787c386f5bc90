#pragma once

#include <functional>

namespace cftail {

/// Result of an adaptive integration: the value, a conservative estimate of
/// the numerical error, and the number of integrand evaluations spent.
struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

struct QuadOptions {
    double rel_tol;
    double abs_tol;
    QuadOptions();  // pulls the process-wide defaults (see set_default_rel_tol)
    QuadOptions(double rel, double abs) : rel_tol(rel), abs_tol(abs) {}
};

/// Process-wide default tolerances (rel 1e-10 / abs 1e-13 unless overridden).
void set_default_rel_tol(double rel);
void set_default_abs_tol(double abs);
double default_rel_tol();
double default_abs_tol();

/// Adaptive integration of g over [lo, hi] with an embedded Gauss-Kronrod
/// 7/15 pair per panel. The worst panel (by the |K15-G7| difference) is
/// bisected until the summed panel errors fall below
/// max(abs_tol, rel_tol*|value|). Panels are re-summed in interval order so
/// results do not depend on the refinement schedule.
///
/// Throws ErrorCode::integrand_domain if g returns a non-finite value and
/// ErrorCode::convergence once a panel budget of 10^6 evaluations is spent.
QuadResult integrate(const std::function<double(double)>& g, double lo, double hi,
                     const QuadOptions& opts = QuadOptions());

/// integrate() folded into a one-sided value: value + error_estimate, which
/// dominates the true integral whenever the error estimate is honest.
double integrate_upper(const std::function<double(double)>& g, double lo, double hi,
                       const QuadOptions& opts = QuadOptions());

}  // namespace cftail
