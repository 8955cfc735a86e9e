#pragma once

#include <complex>
#include <cstdint>

namespace potts {

/// Deterministic 64-bit generator (splitmix64). Used everywhere a seed is
/// taken so that reports are bit-reproducible across platforms; the standard
/// <random> distributions are not guaranteed to be.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo,hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0,n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    /// Uniform over the open disk of radius r centred at c.
    std::complex<double> in_disk(std::complex<double> c, double r) {
        double rad = r * std::sqrt(next_double());
        double ang = uniform(0.0, 6.283185307179586476925286766559);
        return c + std::polar(rad, ang);
    }

    /// Derive an independent stream, e.g. one per work item.
    Rng split(std::uint64_t stream) const {
        Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL)));
        child.next_u64();
        return child;
    }

private:
    std::uint64_t state_;
};

} // namespace potts
