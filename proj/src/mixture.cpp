#include "dnnclust/mixture.hpp"

#include "dnnclust/errors.hpp"

#include <cmath>
#include <numbers>

namespace dnnclust {

std::pair<PointList, std::vector<VertexId>> generate_mixture(const MixtureSpec& spec) {
    if (spec.components.empty()) {
        throw InvalidParameter("generate_mixture: no components");
    }
    for (const auto& c : spec.components) {
        if (c.count < 1) throw InvalidParameter("generate_mixture: component count must be >= 1");
        if (!(c.stddev_x > 0.0) || !(c.stddev_y > 0.0)) {
            throw InvalidParameter("generate_mixture: stddev must be > 0");
        }
    }

    SplitMix64 rng(spec.seed);
    PointList points;
    std::vector<VertexId> labels;
    for (std::size_t ci = 0; ci < spec.components.size(); ++ci) {
        const auto& c = spec.components[ci];
        for (int t = 0; t < c.count; ++t) {
            // Box-Muller: u1 in (0,1] keeps the log finite
            double u1 = rng.uniform_oc();
            double u2 = rng.uniform_co();
            double r = std::sqrt(-2.0 * std::log(u1));
            double z0 = r * std::cos(2.0 * std::numbers::pi * u2);
            double z1 = r * std::sin(2.0 * std::numbers::pi * u2);
            points.push_back({c.mean.x + c.stddev_x * z0, c.mean.y + c.stddev_y * z1});
            labels.push_back(static_cast<VertexId>(ci));
        }
    }
    return {std::move(points), std::move(labels)};
}

MixtureSpec two_gaussian_spec(std::uint64_t seed) {
    MixtureSpec spec;
    spec.seed = seed;
    spec.components.push_back({{0.0, 0.0}, 1.0, 1.0, 30});
    spec.components.push_back({{10.0, 10.0}, 1.0, 1.0, 30});
    return spec;
}

} // namespace dnnclust
