#include "wsn/estimator.hpp"

#include <Eigen/Cholesky>

namespace wsn {

FusionWorkspace make_fusion_workspace(const NetworkConfig& config,
                                      const std::vector<ClusterDerived>& derived,
                                      const Eigen::VectorXd& P, const ChannelState& channel) {
    FusionWorkspace ws;
    ws.Lambda1.reserve(config.L);
    ws.mu.reserve(config.L);
    ws.B.reserve(config.L);
    for (int l = 0; l < config.L; ++l) {
        const double ah2 = channel.h_hat_sq(l);
        const double z2 = channel.zeta_sq[l];
        const ClusterDerived& cd = derived[l];
        Eigen::MatrixXd SqP = (P[l] * cd.Delta);
        SqP.diagonal() += config.sigma_q[l];
        ws.Lambda1.push_back(config.sigma_theta_sq * z2 * P[l] * cd.Pi + (ah2 + z2) * SqP);
        ws.mu.push_back(std::sqrt(P[l]) * channel.h_hat[l] * cd.rho.cast<Complex>());
        ws.B.push_back(config.sigma_theta_sq * z2 * cd.Pi + (ah2 + z2) * cd.Delta);
    }
    return ws;
}

double mse_d(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
             const PowerAllocation& alloc, const ChannelState& channel) {
    double info = 1.0 / config.sigma_theta_sq;
    for (int l = 0; l < config.L; ++l) {
        const Eigen::VectorXd& w = alloc.w[l];
        if (w.size() == 0 || w.isZero() || alloc.P[l] <= 0.0) continue;
        const double ah2 = channel.h_hat_sq(l);
        if (ah2 == 0.0) continue;
        const double z2 = channel.zeta_sq[l];
        const ClusterDerived& cd = derived[l];
        const double a = w.dot(cd.rho);
        const double wq = w.dot(config.sigma_q[l].asDiagonal() * w);
        const double wLw = config.sigma_theta_sq * z2 * alloc.P[l] * a * a +
                           (ah2 + z2) * (wq + alloc.P[l] * w.dot(cd.Delta * w));
        info += alloc.P[l] * ah2 * a * a / (config.sigma_v_sq[l] + wLw);
    }
    return 1.0 / info;
}

Complex lmmse_estimate_complex(const std::vector<Complex>& z, const NetworkConfig& config,
                               const std::vector<ClusterDerived>& derived,
                               const PowerAllocation& alloc, const ChannelState& channel) {
    // C_z is block-diagonal with scalar per-cluster blocks, so the estimate is
    // a per-cluster weighted sum sigma_theta^2 conj(mu_w) z_l / C_l with
    // mu_w = sqrt(P) h_hat (w'rho) and C_l = sigma_theta^2 |mu_w|^2 + sigma_v^2 + w'Lambda1 w.
    Complex est{0.0, 0.0};
    for (int l = 0; l < config.L; ++l) {
        const Eigen::VectorXd& w = alloc.w[l];
        if (w.size() == 0 || w.isZero() || alloc.P[l] <= 0.0) continue;
        const double ah2 = channel.h_hat_sq(l);
        const double z2 = channel.zeta_sq[l];
        const ClusterDerived& cd = derived[l];
        const double a = w.dot(cd.rho);
        const double wq = w.dot(config.sigma_q[l].asDiagonal() * w);
        const double wLw = config.sigma_theta_sq * z2 * alloc.P[l] * a * a +
                           (ah2 + z2) * (wq + alloc.P[l] * w.dot(cd.Delta * w));
        const Complex mu_w = std::sqrt(alloc.P[l]) * channel.h_hat[l] * a;
        const double C = config.sigma_theta_sq * std::norm(mu_w) + config.sigma_v_sq[l] + wLw;
        est += config.sigma_theta_sq * std::conj(mu_w) * z[l] / C;
    }
    return est;
}

double lmmse_estimate(const std::vector<Complex>& z, const NetworkConfig& config,
                      const std::vector<ClusterDerived>& derived, const PowerAllocation& alloc,
                      const ChannelState& channel) {
    return lmmse_estimate_complex(z, config, derived, alloc, channel).real();
}

double bound_d1(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                const Eigen::VectorXd& P, const std::vector<Eigen::VectorXd>& w,
                const std::vector<Complex>& h) {
    double info = 1.0 / config.sigma_theta_sq;
    for (int l = 0; l < config.L; ++l) {
        if (w[l].size() == 0 || w[l].isZero() || P[l] <= 0.0) continue;
        const double ah2 = std::norm(h[l]);
        if (ah2 == 0.0) continue;
        const ClusterDerived& cd = derived[l];
        const double a = w[l].dot(cd.rho);
        const double wq = w[l].dot(config.sigma_q[l].asDiagonal() * w[l]);
        const double den = config.sigma_v_sq[l] + ah2 * (wq + P[l] * w[l].dot(cd.Delta * w[l]));
        info += P[l] * ah2 * a * a / den;
    }
    return 1.0 / info;
}

double bound_d2(const NetworkConfig& config, const std::vector<Eigen::VectorXd>& w,
                const std::vector<Complex>& h) {
    double info = 1.0 / config.sigma_theta_sq;
    for (int l = 0; l < config.L; ++l) {
        if (w[l].size() == 0 || w[l].isZero()) continue;
        const double ah2 = std::norm(h[l]);
        if (ah2 == 0.0) continue;
        const double s = w[l].sum();
        const double den = config.sigma_v_sq[l] + ah2 * w[l].dot(config.Sigma_n[l] * w[l]);
        info += ah2 * s * s / den;
    }
    return 1.0 / info;
}

double bound_d3(const NetworkConfig& config) {
    double info = 1.0 / config.sigma_theta_sq;
    for (int l = 0; l < config.L; ++l) {
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(config.K[l]);
        info += ones.dot(config.Sigma_n[l].llt().solve(ones));
    }
    return 1.0 / info;
}

}  // namespace wsn
