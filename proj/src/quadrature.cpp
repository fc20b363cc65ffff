#include "optstrat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "optstrat/special_functions.hpp"

namespace optstrat {

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
    }
    if (max_subdivisions < 1) {
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
    }
    if (!(halfwidth >= 8.0) || !std::isfinite(halfwidth)) {
        throw std::invalid_argument("QuadratureSpec: halfwidth must be >= 8");
    }
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (positive half).
struct NodeRow {
    double x;
    double wg;  // Gauss-7 weight (0 on Kronrod-only nodes)
    double wk;  // Kronrod-15 weight
};

constexpr NodeRow kG7K15[8] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double error = 0.0;
};

bool worse(const Panel& lhs, const Panel& rhs) { return lhs.error < rhs.error; }

template <class Func>
Panel evaluate_panel(const Func& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double y0 = f(center);
    double g7 = kG7K15[0].wg * y0;
    double k15 = kG7K15[0].wk * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kG7K15[i].x;
        const double yi = f(center + dx) + f(center - dx);
        g7 += kG7K15[i].wg * yi;
        k15 += kG7K15[i].wk * yi;
    }
    g7 *= half;
    k15 *= half;

    // QUADPACK-style sharpened error estimate.
    double err = 200.0 * std::abs(g7 - k15);
    err *= std::sqrt(err);

    Panel p;
    p.a = a;
    p.b = b;
    p.value = k15;
    p.error = err;
    return p;
}

}  // namespace

double normal_expectation(const std::function<double(double)>& f, const QuadratureSpec& spec) {
    spec.validate();
    if (!f) {
        throw std::invalid_argument("normal_expectation: empty integrand");
    }

    const auto weighted = [&f](double h) {
        return f(h) * std::exp(-0.5 * h * h) / kSqrt2Pi;
    };

    // Seed with several panels: the weight is concentrated near the origin and
    // a single panel over 24 SD would start from a poor estimate.
    constexpr int kInitialPanels = 8;
    std::vector<Panel> heap;
    heap.reserve(64);
    const double width = 2.0 * spec.halfwidth / kInitialPanels;
    double total = 0.0;
    double total_err = 0.0;
    for (int i = 0; i < kInitialPanels; ++i) {
        Panel p = evaluate_panel(weighted, -spec.halfwidth + i * width,
                                 -spec.halfwidth + (i + 1) * width);
        total += p.value;
        total_err += p.error;
        heap.push_back(p);
    }
    std::make_heap(heap.begin(), heap.end(), worse);

    int subdivisions = 0;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (++subdivisions > spec.max_subdivisions) {
            throw ConvergenceError("normal_expectation: tolerance not met within max_subdivisions");
        }
        std::pop_heap(heap.begin(), heap.end(), worse);
        const Panel worst = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = evaluate_panel(weighted, worst.a, mid);
        const Panel right = evaluate_panel(weighted, mid, worst.b);

        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;

        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), worse);
    }

    // Final pass re-sums panel values to shed the incremental update drift.
    double sum = 0.0;
    for (const Panel& p : heap) sum += p.value;
    return sum;
}

}  // namespace optstrat
