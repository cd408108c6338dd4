#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace wsn {

// Deterministic random source. mt19937_64 is fully specified by the standard
// and the Gaussian transform is done by hand (Box-Muller), so identical seeds
// give identical streams on every platform. Per-trial streams are derived from
// (seed, stream) so Monte Carlo trials can run in parallel and still reduce to
// bit-identical results.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        // splitmix64 over the pair
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static Rng for_stream(std::uint64_t seed, std::uint64_t stream) {
        return Rng(mix(seed, stream));
    }

    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        // Box-Muller; one value per call keeps the stream layout simple
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // CN(0, 2*half_variance): re and im are independent N(0, half_variance)
    std::complex<double> complex_normal(double half_variance) {
        const double s = std::sqrt(half_variance);
        const double re = normal(0.0, s);
        const double im = normal(0.0, s);
        return {re, im};
    }

    // zero-mean Gaussian vector with covariance L*L^T (L lower Cholesky factor)
    Eigen::VectorXd gaussian_vector(const Eigen::MatrixXd& chol_lower) {
        Eigen::VectorXd iid(chol_lower.rows());
        for (Eigen::Index i = 0; i < iid.size(); ++i) iid[i] = normal();
        return chol_lower * iid;
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace wsn
