#pragma once

#include <vector>

#include "wsn/model.hpp"

namespace wsn {

// Per-cluster second-moment pieces of the received-signal covariance.
// Lambda1 = sigma_theta^2 zeta^2 P Pi + (|h_hat|^2 + zeta^2)(Sigma_q + P Delta)
// mu      = sqrt(P) h_hat rho
// B       = sigma_theta^2 zeta^2 Pi + (|h_hat|^2 + zeta^2) Delta
struct FusionWorkspace {
    std::vector<Eigen::MatrixXd> Lambda1;
    std::vector<Eigen::VectorXcd> mu;
    std::vector<Eigen::MatrixXd> B;
};

FusionWorkspace make_fusion_workspace(const NetworkConfig& config,
                                      const std::vector<ClusterDerived>& derived,
                                      const Eigen::VectorXd& P, const ChannelState& channel);

// Closed-form MSE of the LMMSE estimate of theta at the FC:
// D = (1/sigma_theta^2 + sum_l P |h_hat|^2 w'Pi w / (sigma_v^2 + w'Lambda1 w))^-1.
// Clusters with w = 0 contribute nothing; D = sigma_theta^2 when no cluster
// carries information.
double mse_d(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
             const PowerAllocation& alloc, const ChannelState& channel);

// LMMSE estimate from one round's z. The complex variant exposes the raw
// linear-combination value whose mean-square error equals mse_d; the real
// part is the reported estimate.
Complex lmmse_estimate_complex(const std::vector<Complex>& z, const NetworkConfig& config,
                               const std::vector<ClusterDerived>& derived,
                               const PowerAllocation& alloc, const ChannelState& channel);
double lmmse_estimate(const std::vector<Complex>& z, const NetworkConfig& config,
                      const std::vector<ClusterDerived>& derived, const PowerAllocation& alloc,
                      const ChannelState& channel);

// Lower bound D1: same allocation, perfect CSI (h given, zeta = 0).
double bound_d1(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                const Eigen::VectorXd& P, const std::vector<Eigen::VectorXd>& w,
                const std::vector<Complex>& h);

// Lower bound D2: perfect CSI and error-free sensor-CH links; the signal
// covariance per cluster is the all-ones matrix.
double bound_d2(const NetworkConfig& config, const std::vector<Eigen::VectorXd>& w,
                const std::vector<Complex>& h);

// Lower bound D3: all measurements available at the FC; constant in P_tot.
double bound_d3(const NetworkConfig& config);

}  // namespace wsn
