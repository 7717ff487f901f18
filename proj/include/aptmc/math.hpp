#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace aptmc {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

/// log(exp(a) + exp(b)) without overflow.
inline double log_add_exp(double a, double b) {
    if (a == neg_inf) return b;
    if (b == neg_inf) return a;
    double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

/// Standard normal cdf.
inline double std_normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

/// Unnormalised Gamma(shape, scale) log-density; -inf for x <= 0.
inline double gamma_log_pdf(double x, double shape, double scale) {
    if (x <= 0.0) return neg_inf;
    return (shape - 1.0) * std::log(x) - x / scale - std::lgamma(shape) -
           shape * std::log(scale);
}

/// Composite Simpson rule on [a, b] with n subintervals (n made even).
template <class F>
double simpson(F&& f, double a, double b, std::size_t n = 2000) {
    if (!(b > a)) throw std::invalid_argument("simpson: requires b > a");
    if (n < 2) n = 2;
    if (n % 2 != 0) ++n;
    double h = (b - a) / static_cast<double>(n);
    double s = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i) {
        double x = a + h * static_cast<double>(i);
        s += f(x) * (i % 2 == 0 ? 2.0 : 4.0);
    }
    return s * h / 3.0;
}

/// A probability distribution discretised to equal-width bins on [lo, hi].
/// `mass` holds per-bin probabilities; `outside` is any mass that fell off
/// the grid (only nonzero for sample-based estimates).
struct GridDensity {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<double> mass;
    double outside = 0.0;

    double bin_width() const { return (hi - lo) / static_cast<double>(mass.size()); }

    /// Peak of the piecewise-constant density implied by the bin masses.
    double peak_density() const {
        double m = 0.0;
        for (double p : mass) m = std::max(m, p);
        return m / bin_width();
    }

    /// Probability mass at or above x (grid-resolution accurate).
    double mass_above(double x) const {
        double w = bin_width();
        double total = 0.0;
        for (std::size_t b = 0; b < mass.size(); ++b) {
            double left = lo + w * static_cast<double>(b);
            if (left + 0.5 * w >= x) total += mass[b];
        }
        return total;
    }

    /// Discretise a density function by Simpson integration over each bin,
    /// then normalise so the masses sum to one.
    template <class F>
    static GridDensity from_density(F&& f, double lo, double hi, std::size_t bins,
                                    std::size_t points_per_bin = 8) {
        GridDensity g;
        g.lo = lo;
        g.hi = hi;
        g.mass.resize(bins);
        double w = (hi - lo) / static_cast<double>(bins);
        double total = 0.0;
        for (std::size_t b = 0; b < bins; ++b) {
            double a = lo + w * static_cast<double>(b);
            g.mass[b] = simpson(f, a, a + w, points_per_bin);
            total += g.mass[b];
        }
        if (!(total > 0.0) || !std::isfinite(total))
            throw std::runtime_error("GridDensity: density does not integrate to a positive finite value");
        for (double& m : g.mass) m /= total;
        return g;
    }

    /// Histogram estimate from samples on the same kind of grid.
    static GridDensity from_samples(std::span<const double> xs, double lo, double hi,
                                    std::size_t bins) {
        if (xs.empty()) throw std::invalid_argument("GridDensity: no samples");
        GridDensity g;
        g.lo = lo;
        g.hi = hi;
        g.mass.assign(bins, 0.0);
        double w = (hi - lo) / static_cast<double>(bins);
        std::size_t n_out = 0;
        for (double x : xs) {
            if (x < lo || x >= hi) {
                ++n_out;
                continue;
            }
            auto b = static_cast<std::size_t>((x - lo) / w);
            if (b >= bins) b = bins - 1;
            g.mass[b] += 1.0;
        }
        double n = static_cast<double>(xs.size());
        for (double& m : g.mass) m /= n;
        g.outside = static_cast<double>(n_out) / n;
        return g;
    }
};

/// Total variation distance between two grid distributions on the same grid.
/// Off-grid mass counts fully toward the distance.
inline double total_variation(const GridDensity& a, const GridDensity& b) {
    if (a.mass.size() != b.mass.size() || a.lo != b.lo || a.hi != b.hi)
        throw std::invalid_argument("total_variation: mismatched grids");
    double s = 0.0;
    for (std::size_t i = 0; i < a.mass.size(); ++i) s += std::abs(a.mass[i] - b.mass[i]);
    return 0.5 * (s + a.outside + b.outside);
}

namespace detail {

/// In-place iterative radix-2 FFT (inverse when `inv`).
inline void fft_radix2(std::vector<std::complex<double>>& a, bool inv) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * 3.14159265358979323846 / static_cast<double>(len) * (inv ? -1.0 : 1.0);
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                auto u = a[i + k];
                auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inv)
        for (auto& x : a) x /= static_cast<double>(n);
}

} // namespace detail

/// Autocovariance of a mean-centred series up to max_lag via FFT,
/// normalised by N (the biased estimator).
inline std::vector<double> autocovariance_fft(std::span<const double> xs, std::size_t max_lag) {
    const std::size_t n = xs.size();
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(n);
    std::size_t m = 1;
    while (m < 2 * n) m <<= 1;
    std::vector<std::complex<double>> buf(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) buf[i] = xs[i] - mean;
    detail::fft_radix2(buf, false);
    for (auto& c : buf) c = c * std::conj(c);
    detail::fft_radix2(buf, true);
    std::vector<double> cov(max_lag + 1);
    for (std::size_t k = 0; k <= max_lag && k < n; ++k)
        cov[k] = buf[k].real() / static_cast<double>(n);
    return cov;
}

/// Same estimator by direct summation; reference path for the FFT one.
inline std::vector<double> autocovariance_direct(std::span<const double> xs, std::size_t max_lag) {
    const std::size_t n = xs.size();
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(n);
    std::vector<double> cov(max_lag + 1, 0.0);
    for (std::size_t k = 0; k <= max_lag && k < n; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i + k < n; ++i) s += (xs[i] - mean) * (xs[i + k] - mean);
        cov[k] = s / static_cast<double>(n);
    }
    return cov;
}

} // namespace aptmc
