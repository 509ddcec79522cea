#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "dbatk/context.hpp"
#include "dbatk/topology.hpp"

namespace dbatk {

/// Seeded source for random instances. Draws only from the raw engine
/// output, so a seed yields the same instance on every platform.
class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(unit() * static_cast<double>(hi - lo + 1));
    }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

struct RandomContextOptions {
    std::size_t objects = 3;
    std::size_t attributes = 3;
    /// Incidence probability; drawn from [0.2, 0.8] when unset.
    std::optional<double> density;
};

/// Objects g1..gn, attributes m1..mk.
FormalContext random_context(InstanceRng& rng, const RandomContextOptions& opts);
FormalContext random_context(std::uint64_t seed, const RandomContextOptions& opts);

/// Topology generated by a random closed subbase of 0..n+1 random subsets.
FiniteTopology random_topology(InstanceRng& rng, std::size_t n);

Cts random_cts(InstanceRng& rng, const RandomContextOptions& opts);

}  // namespace dbatk
