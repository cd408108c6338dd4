#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "wsn/random.hpp"

namespace wsn {

using Complex = std::complex<double>;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Static description of the network. Complex Gaussians follow the convention
// CN(0, 2*sigma^2) = two independent N(0, sigma^2) components, so sigma_h_sq
// and sigma_v_sq are half-variances of the CH-FC fading and pilot noise.
// The data-channel noise entering the MSE formulas carries total variance
// sigma_v_sq (see simulate_round).
struct NetworkConfig {
    int L = 0;
    std::vector<int> K;
    double sigma_theta_sq = 1.0;
    std::vector<Eigen::MatrixXd> Sigma_n;   // K_l x K_l, symmetric PD
    std::vector<Eigen::VectorXd> sigma_q;   // diagonal of Sigma_q_l, entries > 0
    std::vector<double> sigma_h_sq;
    std::vector<double> sigma_v_sq;

    // throws ConfigError on dimension mismatch or non-PD covariance
    void validate() const;
};

// Per-cluster precomputed matrices reused by every formula.
struct ClusterDerived {
    Eigen::VectorXd d;       // d_{l,k} = 1/(K_l (sigma_theta^2 + sigma_n_{l,k}^2))
    Eigen::VectorXd D;       // diag entries sqrt(d_{l,k})
    Eigen::VectorXd rho;     // D_l * 1
    Eigen::MatrixXd Pi;      // rho rho^T
    Eigen::MatrixXd Delta;   // D Sigma_n D
    Eigen::MatrixXd Omega;   // Delta + sigma_theta^2 Pi
};

ClusterDerived derive_cluster(const NetworkConfig& config, int l);
std::vector<ClusterDerived> derive_all(const NetworkConfig& config);

// R_t = P * Omega + Sigma_q
Eigen::MatrixXd r_t(const ClusterDerived& derived, const Eigen::VectorXd& sigma_q, double P);

// average CH transmit power w^T R_t w
double ch_transmit_power(const ClusterDerived& derived, const Eigen::VectorXd& sigma_q,
                         double P, const Eigen::VectorXd& w);

// One fading realization with its pilot observation and MMSE estimate.
struct ChannelState {
    std::vector<Complex> h;
    std::vector<Complex> z_pilot;
    std::vector<Complex> h_hat;
    Eigen::VectorXd zeta_sq;

    double h_hat_sq(int l) const { return std::norm(h_hat[l]); }
};

// pilots: z = h sqrt(psi) + nu with nu ~ CN(0, 2 sigma_v^2); MMSE estimate per
// h_hat = sigma_h^2 sqrt(psi) z / (sigma_v^2 + psi sigma_h^2)
ChannelState generate_channels(const NetworkConfig& config, const Eigen::VectorXd& psi, Rng& rng);

// Channel state with h_hat = h and zeta^2 = 0 (perfect CSI evaluations).
ChannelState perfect_channels(const std::vector<Complex>& h);

// Decision variables plus derived totals.
struct PowerAllocation {
    double P_trn = 0.0;
    Eigen::VectorXd psi;             // per-cluster pilot powers, sum = P_trn
    Eigen::VectorXd P;               // intra-cluster powers
    std::vector<Eigen::VectorXd> w;  // fusion vectors
    Eigen::VectorXd V;               // P_l + CH transmit power
    std::vector<int> active;         // clusters with P_l > 0
    double P_tot = 0.0;              // constraint bound carried along
};

// P_trn + sum_l [w^T Sigma_q w + P (1 + w^T Omega w)]
double network_power(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                     const PowerAllocation& alloc);

struct Round {
    double theta = 0.0;
    std::vector<Complex> z;
};

// One observation round. The CH-FC data noise is drawn with TOTAL variance
// sigma_v_sq (components N(0, sigma_v^2/2)); that is the convention under
// which the closed-form MSE expressions in the estimator module are exact.
Round simulate_round(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                     const PowerAllocation& alloc, const ChannelState& channel, Rng& rng);

}  // namespace wsn
