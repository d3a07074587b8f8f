#ifndef QMEX_OPTIM_HPP
#define QMEX_OPTIM_HPP

#include <functional>
#include <vector>

namespace qmex {

struct NelderMeadOptions {
    double tolerance = 1e-8;     // stop when the simplex f-spread falls below this
    int max_iterations = 2000;
    double initial_step = 0.5;   // per-coordinate offset for the initial simplex
};

struct NelderMeadResult {
    std::vector<double> x;
    double fmin = 0.0;
    int iterations = 0;
};

/// Downhill simplex minimization (reflection/expansion/contraction/shrink
/// with the standard 1, 2, 0.5, 0.5 coefficients). Deterministic given the
/// starting point.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts = {});

}  // namespace qmex

#endif
