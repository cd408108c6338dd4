#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace wsn {

struct ConvergenceError : std::runtime_error {
    double best_x;
    double best_f;
    ConvergenceError(const std::string& what, double x, double f)
        : std::runtime_error(what), best_x(x), best_f(f) {}
};

struct SearchSpec {
    double lower = 0.0;
    double upper = 1.0;
    double epsilon = 1e-3;  // interval-length stopping threshold
    int max_iter = 200;
};

struct GoldenResult {
    double x = 0.0;
    double f = 0.0;
    int iterations = 0;
};

// Golden section maximization: evaluation points at 0.382/0.618 of the current
// interval, shrinking until its length drops below epsilon. For a concave f
// the returned x is within epsilon of the maximizer.
GoldenResult golden_section_max(const std::function<double(double)>& f, const SearchSpec& spec);

// Euclidean projection onto {x >= 0, sum(x) = budget} by sort-and-threshold.
Eigen::VectorXd project_simplex(const Eigen::VectorXd& v, double budget);

struct AscentResult {
    Eigen::VectorXd x;
    std::vector<double> trace;  // objective values, nondecreasing
    int iterations = 0;
};

// Projected gradient ascent on the simplex {x >= 0, sum(x) = budget} with
// backtracking (halving) line search from an initial step of budget/10.
// Stops when the projected step moves less than tol (in the x norm).
AscentResult projected_gradient_ascent(const std::function<double(const Eigen::VectorXd&)>& f,
                                       const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& grad,
                                       const Eigen::VectorXd& x0, double budget, double tol,
                                       int max_iter = 500);

}  // namespace wsn
