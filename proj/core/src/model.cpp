#include "wsn/model.hpp"

#include <Eigen/Cholesky>

namespace wsn {

void NetworkConfig::validate() const {
    if (L < 1) throw ConfigError("config: L must be >= 1");
    const auto sz = static_cast<std::size_t>(L);
    if (K.size() != sz || Sigma_n.size() != sz || sigma_q.size() != sz ||
        sigma_h_sq.size() != sz || sigma_v_sq.size() != sz)
        throw ConfigError("config: per-cluster arrays must all have length L");
    if (sigma_theta_sq <= 0.0) throw ConfigError("config: sigma_theta_sq must be > 0");
    for (int l = 0; l < L; ++l) {
        if (K[l] < 1) throw ConfigError("config: K_l must be >= 1");
        if (Sigma_n[l].rows() != K[l] || Sigma_n[l].cols() != K[l])
            throw ConfigError("config: Sigma_n_l must be K_l x K_l");
        if (!Sigma_n[l].isApprox(Sigma_n[l].transpose(), 1e-12))
            throw ConfigError("config: Sigma_n_l must be symmetric");
        Eigen::LLT<Eigen::MatrixXd> llt(Sigma_n[l]);
        if (llt.info() != Eigen::Success)
            throw ConfigError("config: Sigma_n_l must be positive definite");
        if (sigma_q[l].size() != K[l])
            throw ConfigError("config: sigma_q_l must have K_l entries");
        if ((sigma_q[l].array() <= 0.0).any())
            throw ConfigError("config: sigma_q_l entries must be > 0");
        if (sigma_h_sq[l] <= 0.0 || sigma_v_sq[l] <= 0.0)
            throw ConfigError("config: sigma_h_sq and sigma_v_sq must be > 0");
    }
}

ClusterDerived derive_cluster(const NetworkConfig& config, int l) {
    if (l < 0 || l >= config.L) throw ConfigError("derive_cluster: cluster index out of range");
    const int K = config.K[l];
    const Eigen::MatrixXd& Sn = config.Sigma_n[l];
    Eigen::LLT<Eigen::MatrixXd> llt(Sn);
    if (llt.info() != Eigen::Success)
        throw ConfigError("derive_cluster: Sigma_n_l not positive definite");

    ClusterDerived out;
    out.d = (config.sigma_theta_sq + Sn.diagonal().array()).inverse() / K;
    out.D = out.d.cwiseSqrt();
    out.rho = out.D;  // D * 1
    out.Pi = out.rho * out.rho.transpose();
    out.Delta = out.D.asDiagonal() * Sn * out.D.asDiagonal();
    out.Omega = out.Delta + config.sigma_theta_sq * out.Pi;
    return out;
}

std::vector<ClusterDerived> derive_all(const NetworkConfig& config) {
    std::vector<ClusterDerived> out;
    out.reserve(config.L);
    for (int l = 0; l < config.L; ++l) out.push_back(derive_cluster(config, l));
    return out;
}

Eigen::MatrixXd r_t(const ClusterDerived& derived, const Eigen::VectorXd& sigma_q, double P) {
    Eigen::MatrixXd R = P * derived.Omega;
    R.diagonal() += sigma_q;
    return R;
}

double ch_transmit_power(const ClusterDerived& derived, const Eigen::VectorXd& sigma_q,
                         double P, const Eigen::VectorXd& w) {
    if (w.size() == 0) return 0.0;
    return w.dot(r_t(derived, sigma_q, P) * w);
}

ChannelState generate_channels(const NetworkConfig& config, const Eigen::VectorXd& psi, Rng& rng) {
    ChannelState st;
    st.h.resize(config.L);
    st.z_pilot.resize(config.L);
    st.h_hat.resize(config.L);
    st.zeta_sq.resize(config.L);
    for (int l = 0; l < config.L; ++l) {
        const double sh2 = config.sigma_h_sq[l];
        const double sv2 = config.sigma_v_sq[l];
        const Complex h = rng.complex_normal(sh2);
        const Complex nu = rng.complex_normal(sv2);
        const double p = psi[l];
        st.h[l] = h;
        st.z_pilot[l] = h * std::sqrt(p) + nu;
        st.h_hat[l] = sh2 * std::sqrt(p) * st.z_pilot[l] / (sv2 + p * sh2);
        st.zeta_sq[l] = 2.0 * sh2 * sv2 / (sv2 + p * sh2);
    }
    return st;
}

ChannelState perfect_channels(const std::vector<Complex>& h) {
    ChannelState st;
    st.h = h;
    st.h_hat = h;
    st.z_pilot.assign(h.size(), Complex{0.0, 0.0});
    st.zeta_sq = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(h.size()));
    return st;
}

double network_power(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                     const PowerAllocation& alloc) {
    double total = alloc.P_trn;
    for (int l = 0; l < config.L; ++l) {
        const Eigen::VectorXd& w = alloc.w[l];
        const double P = alloc.P[l];
        if (w.size() == 0) {
            total += P;
            continue;
        }
        const double wq = w.dot(config.sigma_q[l].asDiagonal() * w);
        total += wq + P * (1.0 + w.dot(derived[l].Omega * w));
    }
    return total;
}

Round simulate_round(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                     const PowerAllocation& alloc, const ChannelState& channel, Rng& rng) {
    Round round;
    round.theta = rng.normal(0.0, std::sqrt(config.sigma_theta_sq));
    round.z.resize(config.L);
    for (int l = 0; l < config.L; ++l) {
        const int K = config.K[l];
        Eigen::LLT<Eigen::MatrixXd> llt(config.Sigma_n[l]);
        const Eigen::VectorXd n = rng.gaussian_vector(Eigen::MatrixXd(llt.matrixL()));
        Eigen::VectorXd x = Eigen::VectorXd::Constant(K, round.theta) + n;
        // alpha_{l,k} = P_l d_{l,k}, so sqrt(A) = sqrt(P) * D
        Eigen::VectorXd t = std::sqrt(alloc.P[l]) * derived[l].D.cwiseProduct(x);
        for (int k = 0; k < K; ++k) t[k] += rng.normal(0.0, std::sqrt(config.sigma_q[l][k]));
        const double y = alloc.w[l].size() ? alloc.w[l].dot(t) : 0.0;
        // data noise with total variance sigma_v_sq
        const Complex v = rng.complex_normal(0.5 * config.sigma_v_sq[l]);
        round.z[l] = channel.h[l] * y + v;
    }
    return round;
}

}  // namespace wsn
