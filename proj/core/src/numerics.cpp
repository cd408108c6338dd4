#include "wsn/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace wsn {

namespace {
constexpr double kGolden1 = 0.3819660112501051;  // 1 - 1/phi
constexpr double kGolden2 = 0.6180339887498949;  // 1/phi
}  // namespace

GoldenResult golden_section_max(const std::function<double(double)>& f, const SearchSpec& spec) {
    double a = spec.lower, b = spec.upper;
    if (!(a < b)) throw std::invalid_argument("golden_section_max: lower must be < upper");
    if (!(spec.epsilon > 0.0)) throw std::invalid_argument("golden_section_max: epsilon must be > 0");

    double xb = a + kGolden1 * (b - a);
    double xe = a + kGolden2 * (b - a);
    double fb = f(xb);
    double fe = f(xe);
    int it = 0;
    while ((b - a) > spec.epsilon) {
        if (it++ >= spec.max_iter) {
            const double x = fb > fe ? xb : xe;
            throw ConvergenceError("golden_section_max: max_iter exceeded", x, std::max(fb, fe));
        }
        if (fb > fe) {
            b = xe;
            xe = xb; fe = fb;
            xb = a + kGolden1 * (b - a); fb = f(xb);
        } else if (fb < fe) {
            a = xb;
            xb = xe; fb = fe;
            xe = a + kGolden2 * (b - a); fe = f(xe);
        } else {
            a = xb;
            b = xe;
            xb = a + kGolden1 * (b - a); fb = f(xb);
            xe = a + kGolden2 * (b - a); fe = f(xe);
        }
    }
    GoldenResult out;
    out.x = 0.5 * (a + b);
    out.f = f(out.x);
    out.iterations = it;
    return out;
}

Eigen::VectorXd project_simplex(const Eigen::VectorXd& v, double budget) {
    const Eigen::Index n = v.size();
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0;
    double theta = 0.0;
    int rho = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        css += u[i];
        const double t = (css - budget) / static_cast<double>(i + 1);
        if (u[i] - t > 0.0) {
            rho = static_cast<int>(i + 1);
            theta = t;
        }
    }
    (void)rho;
    return (v.array() - theta).max(0.0);
}

AscentResult projected_gradient_ascent(const std::function<double(const Eigen::VectorXd&)>& f,
                                       const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& grad,
                                       const Eigen::VectorXd& x0, double budget, double tol,
                                       int max_iter) {
    AscentResult out;
    Eigen::VectorXd x = project_simplex(x0, budget);
    double fx = f(x);
    out.trace.push_back(fx);
    const double step0 = budget / 10.0;
    for (int it = 0; it < max_iter; ++it) {
        out.iterations = it + 1;
        const Eigen::VectorXd g = grad(x);
        // projected-gradient mapping at the reference step
        const Eigen::VectorXd pg = (project_simplex(x + step0 * g, budget) - x) / step0;
        if (pg.norm() < tol) break;
        double step = step0;
        Eigen::VectorXd xn;
        double fn = fx;
        bool improved = false;
        while (step > 1e-16 * step0) {
            xn = project_simplex(x + step * g, budget);
            fn = f(xn);
            if (fn >= fx) { improved = true; break; }
            step *= 0.5;
        }
        if (!improved) break;  // objective flat along the feasible direction
        x = xn;
        fx = fn;
        out.trace.push_back(fx);
        if (it + 1 == max_iter)
            throw ConvergenceError("projected_gradient_ascent: max_iter exceeded", 0.0, fx);
    }
    out.x = x;
    return out;
}

}  // namespace wsn
