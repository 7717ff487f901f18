#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "math.hpp"
#include "random.hpp"

namespace aptmc {

/// Equal-weight (by default) mixture of two Gamma distributions.
struct GammaMixtureTarget {
    double k1;
    double theta1;
    double k2;
    double theta2;
    double weight = 0.5; // mixture coefficient of the first component

    double log_density(double x) const {
        if (x <= 0.0) return neg_inf;
        double a = std::log(weight) + gamma_log_pdf(x, k1, theta1);
        double b = std::log(1.0 - weight) + gamma_log_pdf(x, k2, theta2);
        return log_add_exp(a, b);
    }

    double density(double x) const {
        double l = log_density(x);
        return l == neg_inf ? 0.0 : std::exp(l);
    }

    /// Direct draw, also reporting which component produced it. The latent
    /// component is what makes importance-style oracles cheap.
    std::pair<int, double> sample_with_component(RngStream& rng) const {
        if (rng.uniform() < weight) return {1, rng.gamma(k1, theta1)};
        return {2, rng.gamma(k2, theta2)};
    }

    double sample(RngStream& rng) const { return sample_with_component(rng).second; }
};

/// Mixture coefficient of the interrupted-state distribution for a
/// polynomial-degree hold model over an equal Gamma mixture:
///   (1 + Gamma(k1) Gamma(p+k2) theta2^p / (Gamma(k2) Gamma(p+k1) theta1^p))^{-1}
inline double anytime_mixture_weight(int degree, double k1, double k2, double theta1,
                                     double theta2) {
    if (degree < 0) throw std::invalid_argument("anytime_mixture_weight: degree must be >= 0");
    double p = static_cast<double>(degree);
    double log_num = std::lgamma(k1) + std::lgamma(p + k2);
    double log_den = std::lgamma(k2) + std::lgamma(p + k1);
    double log_ratio = log_num - log_den + p * (std::log(theta2) - std::log(theta1));
    return 1.0 / (1.0 + std::exp(log_ratio));
}

/// Closed-form distribution of the state observed when the sampler is
/// interrupted at an arbitrary time, for the degree-p hold model:
/// a Gamma(k1+p, theta1) / Gamma(k2+p, theta2) mixture with the weight above.
inline double anytime_density(const GammaMixtureTarget& target, int degree, double x) {
    if (x <= 0.0) return 0.0;
    double phi = anytime_mixture_weight(degree, target.k1, target.k2, target.theta1,
                                        target.theta2);
    double p = static_cast<double>(degree);
    double g1 = std::exp(gamma_log_pdf(x, target.k1 + p, target.theta1));
    double g2 = std::exp(gamma_log_pdf(x, target.k2 + p, target.theta2));
    return phi * g1 + (1.0 - phi) * g2;
}

/// Length-biased reference density E[H|x] pi(x) / E[H]. The normaliser E[H]
/// is integrated numerically over [lo, hi] unless supplied by the caller.
template <class Pi, class ExpectedHold>
double length_biased_reference(Pi&& pi_density, ExpectedHold&& expected_hold, double x,
                               double lo, double hi,
                               std::optional<double> normalizer = std::nullopt,
                               std::size_t quadrature_points = 20000) {
    double eh = expected_hold(x);
    if (!(eh > 0.0))
        throw std::domain_error("length_biased_reference: expected hold must be > 0");
    double z = normalizer ? *normalizer
                          : simpson([&](double t) { return expected_hold(t) * pi_density(t); },
                                    lo, hi, quadrature_points);
    if (!std::isfinite(z) || z <= 0.0)
        throw std::runtime_error("length_biased_reference: non-integrable product");
    return eh * pi_density(x) / z;
}

} // namespace aptmc
