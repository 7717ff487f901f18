#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

namespace aptmc {

/// 64-bit FNV-1a hash of a string, used to turn stream tags into seed material.
constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 0x100000001b3ull;
    }
    return h;
}

/// SplitMix64 output function (Steele et al.), used as a seed mixer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// A self-contained random stream with explicit, portable samplers.
///
/// All distribution samplers are implemented here rather than with
/// std::*_distribution so that a given (seed, call sequence) produces the
/// same draws on every standard library. This is what makes virtual-mode
/// runs byte-reproducible.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform draw strictly inside (0,1).
    double uniform() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (no cached spare, two uniforms per draw).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    double exponential(double rate) {
        if (rate <= 0.0) throw std::domain_error("exponential: rate must be > 0");
        return -std::log(uniform()) / rate;
    }

    /// Gamma(shape, scale) via Marsaglia-Tsang squeeze, boosted for shape < 1.
    double gamma(double shape, double scale) {
        if (shape <= 0.0 || scale <= 0.0)
            throw std::domain_error("gamma: shape and scale must be > 0");
        if (shape < 1.0) {
            double u = uniform();
            return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double t = 1.0 + c * x;
            if (t <= 0.0) continue;
            double v = t * t * t;
            double u = uniform();
            double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v * scale;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v * scale;
        }
    }

    /// Uniform index in [0, n).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(static_cast<double>(n) * uniform());
    }

private:
    std::mt19937_64 gen_;
};

/// Derives independent streams from one root seed.
///
/// Splitting rule: seed(tag, i) = mix64(mix64(root ^ fnv1a64(tag)) + (i+1) * GOLDEN).
/// A stream's seed depends only on its own (tag, index), never on how many
/// other streams exist, so changing the chain or worker count does not
/// silently correlate or shift the remaining streams.
class SeedSequence {
public:
    explicit SeedSequence(std::uint64_t root) : root_(root) {}

    std::uint64_t root() const { return root_; }

    RngStream stream(std::string_view tag) const { return stream(tag, 0); }

    RngStream stream(std::string_view tag, std::uint64_t index) const {
        constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ull;
        std::uint64_t base = mix64(root_ ^ fnv1a64(tag));
        return RngStream(mix64(base + (index + 1) * golden));
    }

private:
    std::uint64_t root_;
};

} // namespace aptmc
