#pragma once

#include <optional>
#include <vector>

#include "wsn/estimator.hpp"
#include "wsn/model.hpp"
#include "wsn/numerics.hpp"

namespace wsn {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveOptions {
    double eps = 1e-3;   // relative objective / interval tolerance
    int max_iter = 100;  // block-coordinate iteration cap
    bool random_init = false;
    Rng* rng = nullptr;  // used only when random_init is set
};

// Solution of (SP2-1) for one cluster at a given total V_l.
struct InnerSolution {
    double P = 0.0;
    Eigen::VectorXd w;
    double tau = 0.0;   // rho' R_t^-1 rho at P
    double beta = 0.0;  // sigma_v^2 / (|h_hat|^2 (1 - sigma_theta^2 P tau) + zeta^2)
    double F = 0.0;     // achieved objective term
    int golden_iterations = 0;
};

struct Sp22Result {
    Eigen::VectorXd V;
    std::vector<int> active;
    double lambda = 0.0;
};

struct KktReport {
    double power_residual = 0.0;         // |network power - P_tot| / P_tot
    double max_stationarity = 0.0;       // Eq. (29a) vector norm, normalized, worst cluster
    double max_cluster_constraint = 0.0; // |C_l - V_l| / V_l, worst active cluster
    double waterfill_residual = 0.0;     // |sum_A V_l - data budget| / budget
    double lambda = 0.0;                 // multiplier of the V-allocation
    double kappa = 0.0;                  // multiplier of the training split (when solved)
    double training_residual = 0.0;      // stationarity spread of the training split
};

struct SolveReport {
    PowerAllocation alloc;
    double objective = 0.0;  // sum of cluster terms F_l
    double mse = 0.0;        // D evaluated on the channel state used by the solve
    int iterations = 0;      // block-coordinate iterations (algorithm1 family)
    int search_iterations = 0;  // golden-section iterations of the outermost scalar search
    double sigma = 1.0;      // data fraction: (P_tot - P_trn)/P_tot
    std::vector<double> trace;  // objective after each block pass, nondecreasing
    KktReport kkt;
};

// Training-stage output: the split of P_tot into training and data plus the
// per-cluster pilot powers. Depends only on channel statistics.
struct TrainingPlan {
    double sigma = 1.0;
    double P_trn = 0.0;
    Eigen::VectorXd psi;
    int golden_iterations = 0;
    double kappa = 0.0;
    double training_residual = 0.0;
};

// C_l(P, w) = w'Sigma_q w + P (1 + w'Omega w)
double cluster_power(const NetworkConfig& config, const ClusterDerived& derived, int l, double P,
                     const Eigen::VectorXd& w);

// F_l(P, w) = P |h_hat|^2 (w'rho)^2 / (sigma_v^2 + w'Lambda1 w)
double cluster_objective(const NetworkConfig& config, const ClusterDerived& derived, int l,
                         double P, const Eigen::VectorXd& w, double h_hat_sq, double zeta_sq);

// Optimal fusion vector and objective value at fixed P (Prop. 1):
// w = sqrt((V-P)/tau) R_t^-1 rho.
InnerSolution fusion_weights_given_p(const NetworkConfig& config, const ClusterDerived& derived,
                                     int l, double h_hat_sq, double zeta_sq, double P, double V);

// Closed form for P at fixed w.
double p_given_weights(const NetworkConfig& config, const ClusterDerived& derived, int l,
                       const Eigen::VectorXd& w, double V, double h_hat_sq, double zeta_sq);

// Golden-section solve of the single-cluster subproblem over P in (0, V).
InnerSolution solve_sp21(const NetworkConfig& config, const ClusterDerived& derived, int l,
                         double V, double h_hat_sq, double zeta_sq, double eps);

// Water-filling V-allocation given the current (P_l, tau_l, beta_l).
// delta_budget = budget - sum_l P_l; pass every cluster's P (including the
// common-P case where inactive clusters still consume P_l).
Sp22Result solve_sp22(const NetworkConfig& config, const Eigen::VectorXd& P,
                      const Eigen::VectorXd& tau, const Eigen::VectorXd& beta,
                      const Eigen::VectorXd& h_hat_sq, double budget);

// Block-coordinate ascent between SP2-1 and SP2-2 (problem P_A).
SolveReport algorithm1(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                       const ChannelState& channel, double P_trn, const Eigen::VectorXd& psi,
                       double P_tot, const SolveOptions& opts);

// Training split: golden section over sigma of the surrogate objective where
// |h_hat|^2 is replaced by its expectation 2 sigma_h^2 - zeta^2.
TrainingPlan algorithm2(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                        double P_tot, const SolveOptions& opts);

// Pilot-power distribution minimizing the sum of channel-estimation error
// variances (water-filling branch) or the proportional fallback.
Eigen::VectorXd distribute_training(const NetworkConfig& config, double P_trn);
TrainingPlan make_training_plan(const NetworkConfig& config, double sigma, double P_tot);

// Surrogate channel state carrying |h_hat|^2 = 2 sigma_h^2 - zeta^2.
ChannelState surrogate_channel(const NetworkConfig& config, const Eigen::VectorXd& psi);

// Special cases. The *_plan stages depend on statistics only; the
// *_given_channel stages solve for actual channel estimates.
SolveReport solve_p1sc1(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                        const ChannelState& channel, double P_tot, double ptrn_fraction,
                        const SolveOptions& opts);

TrainingPlan sc2_plan(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                      double P_tot, const SolveOptions& opts);
SolveReport sc2_given_channel(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                              const ChannelState& channel, const TrainingPlan& plan, double P_tot,
                              const SolveOptions& opts);
SolveReport solve_p1sc2(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                        double P_tot, const SolveOptions& opts, Rng& rng);

TrainingPlan sc3_plan(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                      double P_tot, const SolveOptions& opts);
SolveReport sc3_given_channel(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                              const ChannelState& channel, const TrainingPlan& plan, double P_tot,
                              const SolveOptions& opts);
SolveReport solve_p1sc3(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                        double P_tot, const SolveOptions& opts, Rng& rng);

// Lower-bound problems: P3 reuses algorithm1 with perfect CSI and no training;
// P4 is the closed-form weight-only water-filling. solve_p4's report accounts
// power by the (P4) constraint sum_l w'(sigma_theta^2 ones + Sigma_n) w.
SolveReport solve_p3(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                     const std::vector<Complex>& h, double P_tot, const SolveOptions& opts);
SolveReport solve_p4(const NetworkConfig& config, const std::vector<ClusterDerived>& derived,
                     const std::vector<Complex>& h, double P_tot);

// Residual of the scalar optimality equation that couples Prop. 1 with the
// closed form for P (diagnostic for tests and KKT certification).
double sp21_p_equation_residual(const NetworkConfig& config, const ClusterDerived& derived, int l,
                                double P, double V, double h_hat_sq, double zeta_sq);

}  // namespace wsn
