/**
 * Seeded Monte-Carlo estimation of weighted volumes and first moments by
 * rejection sampling in the bounding box. An independent statistical check
 * on the exact integration path, deliberately floating point.
 *
 * Generator: SplitMix64 (Steele-Lea-Vigna constants), fixed for
 * reproducibility. Sampling is sharded: shard s draws from a fresh stream
 * seeded seed+s, and shard sums are combined in shard order, so an estimate
 * is a pure function of (seed, samples).
 */
#ifndef KESTAB_MONTECARLO_HPP
#define KESTAB_MONTECARLO_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kestab/polytope.hpp"
#include "kestab/weight_polynomial.hpp"

namespace kestab {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct McEstimate {
    double value = 0;
    double std_error = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

struct McMoments {
    McEstimate volume;                ///< int_P poly dy
    std::vector<McEstimate> first_moments; ///< int_P y_k poly dy
    double acceptance_rate = 0;
};

/// Throws std::runtime_error if no sample lands in the polytope.
inline McMoments mc_moments(const Polytope& p, const WeightPolynomial& poly,
                            std::size_t samples, std::uint64_t seed) {
    if (samples < 1000)
        throw std::invalid_argument("mc_moments: at least 1000 samples required");
    const std::size_t r = p.ambient_dim();

    std::vector<double> lo(r), hi(r);
    for (std::size_t k = 0; k < r; ++k) {
        Rational mn = p.vertices()[0][k], mx = mn;
        for (const auto& v : p.vertices()) {
            mn = std::min(mn, v[k]);
            mx = std::max(mx, v[k]);
        }
        lo[k] = to_double(mn);
        hi[k] = to_double(mx);
    }
    double box_vol = 1;
    for (std::size_t k = 0; k < r; ++k) box_vol *= hi[k] - lo[k];

    struct DoubleHs { std::vector<double> n; double c; };
    std::vector<DoubleHs> hs;
    for (const auto& h : p.halfspaces()) {
        DoubleHs d{std::vector<double>(r), to_double(h.offset)};
        for (std::size_t k = 0; k < r; ++k) d.n[k] = to_double(h.normal[k]);
        hs.push_back(std::move(d));
    }

    const std::size_t nf = r + 1; // weight, then y_k * weight
    std::vector<double> sum(nf, 0.0), sumsq(nf, 0.0);
    std::size_t accepted = 0;

    constexpr std::size_t shard_size = 1u << 16;
    std::vector<double> y(r);
    std::size_t done = 0;
    for (std::uint64_t shard = 0; done < samples; ++shard) {
        SplitMix64 rng(seed + shard);
        const std::size_t n = std::min(shard_size, samples - done);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < r; ++k)
                y[k] = lo[k] + (hi[k] - lo[k]) * rng.next_double();
            bool inside = true;
            for (const auto& h : hs) {
                double s = 0;
                for (std::size_t k = 0; k < r; ++k) s += h.n[k] * y[k];
                if (s > h.c) { inside = false; break; }
            }
            if (!inside) continue;
            ++accepted;
            const double w = poly.evaluate(y);
            sum[0] += w;
            sumsq[0] += w * w;
            for (std::size_t k = 0; k < r; ++k) {
                const double f = y[k] * w;
                sum[k + 1] += f;
                sumsq[k + 1] += f * f;
            }
        }
        done += n;
    }
    if (accepted == 0)
        throw std::runtime_error("mc_moments: acceptance rate 0, region has empty interior");

    McMoments out;
    out.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(samples);
    auto estimate = [&](std::size_t f) {
        const double n = static_cast<double>(samples);
        const double mean = sum[f] / n;
        const double var = std::max(0.0, sumsq[f] / n - mean * mean);
        return McEstimate{box_vol * mean, box_vol * std::sqrt(var / n), samples, seed};
    };
    out.volume = estimate(0);
    for (std::size_t k = 0; k < r; ++k) out.first_moments.push_back(estimate(k + 1));
    return out;
}

} // namespace kestab

#endif // KESTAB_MONTECARLO_HPP
