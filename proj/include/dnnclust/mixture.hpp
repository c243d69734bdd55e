#pragma once

#include "dnnclust/point.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace dnnclust {

/// Deterministic 64-bit stream generator (splitmix64). The whole toolkit
/// draws randomness through this one generator so every seeded run is
/// bit-reproducible across runs and worker counts.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in (0, 1].
    double uniform_oc() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform double in [0, 1).
    double uniform_co() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// One Gaussian blob: axis-aligned normal with per-axis standard deviation.
struct MixtureComponent {
    Point2 mean;
    double stddev_x = 1.0;
    double stddev_y = 1.0;
    int count = 1;
};

/// A seeded Gaussian mixture. Sampling is fully specified: a splitmix64
/// stream feeds one Box-Muller transform per point (both normal deviates of
/// the pair are used, one per axis), components in order, points in order.
struct MixtureSpec {
    std::vector<MixtureComponent> components;
    std::uint64_t seed = 0;
};

/// Sample the mixture. Labels are component indices. Identical spec + seed
/// produce bitwise-identical points. Throws InvalidParameter on nonpositive
/// counts or standard deviations.
std::pair<PointList, std::vector<VertexId>> generate_mixture(const MixtureSpec& spec);

/// Seed of the pinned two-Gaussian reference dataset (means (0,0) and
/// (10,10), unit stddev, 30 + 30 points) used throughout the tests.
inline constexpr std::uint64_t kTwoGaussianSeed = 42;

/// The pinned two-Gaussian spec with an optional seed override.
MixtureSpec two_gaussian_spec(std::uint64_t seed = kTwoGaussianSeed);

} // namespace dnnclust
