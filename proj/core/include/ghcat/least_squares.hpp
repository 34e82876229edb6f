#pragma once

#include <functional>
#include <vector>

namespace ghcat {

/// Dense damped Gauss-Newton for small polynomial systems.  The callback
/// fills the residual vector and, when J is non-null, the Jacobian
/// (row-major, num_residuals x num_params).
struct LMOptions {
    int max_iter = 80;
    double lambda_init = 1e-3;
    double lambda_up = 4.0;
    double lambda_down = 1.0 / 3.0;
    double gtol = 1e-14;       // max |J^T r| for convergence
    double target_cost = 0.0;  // stop once 0.5 |r|^2 falls below
};

struct LMResult {
    std::vector<double> x;
    double cost = 0.0;          // 0.5 |r|^2
    double max_residual = 0.0;  // max |r_i|
    int iterations = 0;
    bool converged = false;
};

using ResidualFn =
    std::function<void(const std::vector<double>&, std::vector<double>&, std::vector<double>*)>;

LMResult levenberg_marquardt(int num_params, int num_residuals, const ResidualFn& fn,
                             std::vector<double> x0, const LMOptions& opts = {});

}  // namespace ghcat
