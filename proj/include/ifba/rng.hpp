#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "ifba/errors.hpp"

namespace ifba {

// Deterministic random source. All draws go through uniform01(), which maps
// raw 64-bit output to doubles with a fixed rule, so a seed pins every sample
// exactly (std::uniform_real_distribution makes no such promise).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // [0, 1) with 53 random mantissa bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Log-uniform on [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) {
        if (!(lo > 0.0) || !(hi >= lo))
            throw DomainError("log_uniform requires 0 < lo <= hi");
        return lo * std::exp(uniform01() * std::log(hi / lo));
    }

    // Standard normal via Box-Muller, one variate per call.
    double gaussian() {
        double u1 = uniform01();
        double u2 = uniform01();
        // Avoid log(0).
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    // Uniform direction on the Euclidean unit sphere in R^dim.
    std::vector<double> unit_sphere(std::size_t dim) {
        std::vector<double> v(dim);
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& c : v) {
                c = gaussian();
                norm2 += c * c;
            }
        } while (norm2 == 0.0);
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& c : v) c *= inv;
        return v;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace ifba
