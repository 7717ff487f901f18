#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "random.hpp"

namespace aptmc {

/// Distribution of local-move durations.
///
/// Two flavours: an explicit two-component Gamma mixture whose shape depends
/// on the current state x through x^degree (so E[H | x] = x^degree), and a
/// `measured` recorder that only stores durations observed on a real clock.
class HoldTimeModel {
public:
    enum class Kind { explicit_gamma_mixture, measured };

    static HoldTimeModel gamma_mixture(double theta1, double theta2, int degree,
                                       double psi = 1.0, double min_hold = 0.0) {
        if (theta1 <= 0.0 || theta2 <= 0.0)
            throw std::invalid_argument("HoldTimeModel: scales must be > 0");
        if (psi < 0.0 || psi > 1.0)
            throw std::invalid_argument("HoldTimeModel: psi must be in [0,1]");
        if (degree < 0 || degree > 3)
            throw std::invalid_argument("HoldTimeModel: degree must be in {0,1,2,3}");
        if (min_hold < 0.0)
            throw std::invalid_argument("HoldTimeModel: min_hold must be >= 0");
        HoldTimeModel m;
        m.kind_ = Kind::explicit_gamma_mixture;
        m.theta1_ = theta1;
        m.theta2_ = theta2;
        m.psi_ = psi;
        m.degree_ = degree;
        m.min_hold_ = min_hold;
        return m;
    }

    static HoldTimeModel measured() {
        HoldTimeModel m;
        m.kind_ = Kind::measured;
        return m;
    }

    Kind kind() const { return kind_; }
    int degree() const { return degree_; }
    double min_hold() const { return min_hold_; }

    /// Draw a hold time given the current state value x.
    double sample(double x, RngStream& rng) const {
        if (kind_ == Kind::measured)
            throw std::logic_error("HoldTimeModel: a measured model cannot be sampled");
        if (!(x > 0.0))
            throw std::domain_error("HoldTimeModel: state value must be > 0");
        double theta = (rng.uniform() < psi_) ? theta1_ : theta2_;
        double shape = std::pow(x, static_cast<double>(degree_)) / theta;
        double h = rng.gamma(shape, theta);
        return std::max(h, min_hold_);
    }

    /// E[H | x] = x^degree for the explicit mixture (independent of psi).
    double expected_given(double x) const {
        if (kind_ == Kind::measured)
            throw std::logic_error("HoldTimeModel: measured model has no closed-form mean");
        return std::pow(x, static_cast<double>(degree_));
    }

    void record(double h) {
        if (kind_ != Kind::measured)
            throw std::logic_error("HoldTimeModel: only measured models record durations");
        observed_.push_back(h);
    }

    const std::vector<double>& observations() const { return observed_; }

private:
    Kind kind_ = Kind::measured;
    double theta1_ = 1.0;
    double theta2_ = 1.0;
    double psi_ = 1.0;
    int degree_ = 0;
    double min_hold_ = 0.0;
    std::vector<double> observed_;
};

inline double sample_hold_time(const HoldTimeModel& model, double x, RngStream& rng) {
    return model.sample(x, rng);
}

} // namespace aptmc
