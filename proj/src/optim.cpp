#include "qmex/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qmex {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts) {
    const int n = static_cast<int>(x0.size());
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (int i = 0; i < n; ++i) simplex[i + 1][i] += opts.initial_step;
    std::vector<double> fv(n + 1);
    for (int i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

    std::vector<int> order(n + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    };

    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        sort_simplex();
        int best = order[0], worst = order[n], second_worst = order[n - 1];
        if (std::abs(fv[worst] - fv[best]) < opts.tolerance) break;

        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (int d = 0; d < n; ++d) centroid[d] += simplex[i][d];
        }
        for (double& c : centroid) c /= n;

        auto blend = [&](double t) {
            std::vector<double> x(n);
            for (int d = 0; d < n; ++d) x[d] = centroid[d] + t * (centroid[d] - simplex[worst][d]);
            return x;
        };

        std::vector<double> reflected = blend(1.0);
        double fr = f(reflected);
        if (fr < fv[best]) {
            std::vector<double> expanded = blend(2.0);
            double fe = f(expanded);
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                fv[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                fv[worst] = fr;
            }
        } else if (fr < fv[second_worst]) {
            simplex[worst] = std::move(reflected);
            fv[worst] = fr;
        } else {
            bool outside = fr < fv[worst];
            std::vector<double> contracted = blend(outside ? 0.5 : -0.5);
            double fc = f(contracted);
            if (fc < std::min(fr, fv[worst])) {
                simplex[worst] = std::move(contracted);
                fv[worst] = fc;
            } else {
                // shrink toward the best vertex
                for (int i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (int d = 0; d < n; ++d)
                        simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }
    sort_simplex();
    return {simplex[order[0]], fv[order[0]], iter};
}

}  // namespace qmex
