#include "ghcat/least_squares.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace ghcat {

LMResult levenberg_marquardt(int num_params, int num_residuals, const ResidualFn& fn,
                             std::vector<double> x0, const LMOptions& opts) {
    using Eigen::MatrixXd;
    using Eigen::VectorXd;

    LMResult result;
    VectorXd x = Eigen::Map<VectorXd>(x0.data(), num_params);
    std::vector<double> rbuf(num_residuals), jbuf;
    jbuf.assign(static_cast<std::size_t>(num_residuals) * num_params, 0.0);

    auto eval = [&](const VectorXd& p, VectorXd& r, MatrixXd* J) {
        std::vector<double> pv(p.data(), p.data() + num_params);
        std::fill(jbuf.begin(), jbuf.end(), 0.0);
        fn(pv, rbuf, J ? &jbuf : nullptr);
        r = Eigen::Map<VectorXd>(rbuf.data(), num_residuals);
        if (J)
            *J = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                          Eigen::RowMajor>>(jbuf.data(), num_residuals,
                                                            num_params);
    };

    VectorXd r;
    MatrixXd J;
    eval(x, r, &J);
    double cost = 0.5 * r.squaredNorm();
    double lambda = opts.lambda_init;

    int it = 0;
    for (; it < opts.max_iter; ++it) {
        const MatrixXd jtj = J.transpose() * J;
        const VectorXd jtr = J.transpose() * r;
        if (jtr.lpNorm<Eigen::Infinity>() < opts.gtol) break;
        if (cost <= opts.target_cost) break;

        bool stepped = false;
        for (int tries = 0; tries < 12 && !stepped; ++tries) {
            MatrixXd damped = jtj;
            damped.diagonal().array() += lambda;
            const VectorXd step = damped.ldlt().solve(-jtr);
            if (!step.allFinite()) {
                lambda *= opts.lambda_up;
                continue;
            }
            const VectorXd xn = x + step;
            VectorXd rn;
            eval(xn, rn, nullptr);
            const double cn = 0.5 * rn.squaredNorm();
            if (cn < cost) {
                x = xn;
                cost = cn;
                lambda = std::max(lambda * opts.lambda_down, 1e-14);
                eval(x, r, &J);
                stepped = true;
            } else {
                lambda *= opts.lambda_up;
            }
        }
        if (!stepped) break;
    }

    result.x.assign(x.data(), x.data() + num_params);
    result.cost = cost;
    result.max_residual = r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
    result.iterations = it;
    result.converged = true;
    return result;
}

}  // namespace ghcat
