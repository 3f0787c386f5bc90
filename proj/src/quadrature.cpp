#include "quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cftail {
namespace {

std::atomic<double> g_rel_tol{1e-10};
std::atomic<double> g_abs_tol{1e-13};

// Gauss-Kronrod 7/15 on [-1,1]: {abscissa, Gauss weight, Kronrod weight}.
// Gauss weights of the Kronrod-only nodes are zero.
constexpr double kNodes[8][3] = {
    {0.0000000000000000, 0.4179591836734694, 0.2094821410847278},
    {0.4058451513773972, 0.3818300505051189, 0.1903505780647854},
    {0.7415311855993944, 0.2797053914892767, 0.1406532597155259},
    {0.9491079123427585, 0.1294849661688697, 0.0630920926299786},
    {0.2077849550078985, 0.0,                0.2044329400752989},
    {0.5860872354676911, 0.0,                0.1690047266392679},
    {0.8648644233597691, 0.0,                0.1047900103222502},
    {0.9914553711208126, 0.0,                0.0229353220105292},
};

constexpr long kEvalBudget = 1000000;

struct Panel {
    double lo, hi;
    double value;  // K15 estimate
    double error;  // |K15 - G7| plus a roundoff floor
};

Panel evaluate_panel(const std::function<double(double)>& g, double lo, double hi, long& evals) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    auto sample = [&](double x) {
        double y = g(x);
        if (!std::isfinite(y))
            fail(ErrorCode::integrand_domain,
                 "integrand returned a non-finite value at x=" + std::to_string(x));
        return y;
    };

    double y0 = sample(mid);
    double g7 = kNodes[0][1] * y0;
    double k15 = kNodes[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNodes[i][0];
        const double pair = sample(mid + dx) + sample(mid - dx);
        g7 += kNodes[i][1] * pair;
        k15 += kNodes[i][2] * pair;
    }
    evals += 15;

    g7 *= half;
    k15 *= half;
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(k15);
    return Panel{lo, hi, k15, std::max(std::abs(k15 - g7), floor)};
}

}  // namespace

QuadOptions::QuadOptions() : rel_tol(g_rel_tol.load()), abs_tol(g_abs_tol.load()) {}

void set_default_rel_tol(double rel) {
    if (!(rel > 0.0)) fail(ErrorCode::invalid_parameter, "rel_tol must be positive");
    g_rel_tol.store(rel);
}
void set_default_abs_tol(double abs) {
    if (!(abs > 0.0)) fail(ErrorCode::invalid_parameter, "abs_tol must be positive");
    g_abs_tol.store(abs);
}
double default_rel_tol() { return g_rel_tol.load(); }
double default_abs_tol() { return g_abs_tol.load(); }

QuadResult integrate(const std::function<double(double)>& g, double lo, double hi,
                     const QuadOptions& opts) {
    if (!(opts.rel_tol > 0.0) || !(opts.abs_tol > 0.0))
        fail(ErrorCode::invalid_parameter, "quadrature tolerances must be positive");
    if (!(lo <= hi)) fail(ErrorCode::invalid_parameter, "integration bounds require lo <= hi");

    long evals = 0;
    if (lo == hi) return QuadResult{0.0, 0.0, 0};

    std::vector<Panel> panels;
    panels.push_back(evaluate_panel(g, lo, hi, evals));

    double total_value = panels[0].value;
    double total_error = panels[0].error;

    while (total_error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total_value))) {
        if (evals + 30 > kEvalBudget)
            fail(ErrorCode::convergence,
                 "quadrature did not converge within the evaluation budget (1e6)");

        // Bisect the worst panel.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].error > panels[worst].error) worst = i;
        const Panel old = panels[worst];
        const double mid = 0.5 * (old.lo + old.hi);
        if (mid <= old.lo || mid >= old.hi)
            fail(ErrorCode::convergence, "quadrature panel collapsed below double resolution");

        const Panel left = evaluate_panel(g, old.lo, mid, evals);
        const Panel right = evaluate_panel(g, mid, old.hi, evals);
        panels[worst] = left;
        panels.push_back(right);

        total_value += left.value + right.value - old.value;
        total_error += left.error + right.error - old.error;
    }

    // Deterministic reduction: sum left to right regardless of split order.
    std::sort(panels.begin(), panels.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    double value = 0.0, error = 0.0;
    for (const Panel& p : panels) {
        value += p.value;
        error += p.error;
    }
    return QuadResult{value, error, evals};
}

double integrate_upper(const std::function<double(double)>& g, double lo, double hi,
                       const QuadOptions& opts) {
    const QuadResult r = integrate(g, lo, hi, opts);
    return r.value + r.error_estimate;
}

}  // namespace cftail
