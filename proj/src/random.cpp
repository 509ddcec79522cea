#include "dbatk/random.hpp"

namespace dbatk {

FormalContext random_context(InstanceRng& rng, const RandomContextOptions& opts) {
    const double p = opts.density ? *opts.density : 0.2 + 0.6 * rng.unit();
    std::vector<std::string> objects, attributes;
    for (std::size_t g = 0; g < opts.objects; ++g) objects.push_back("g" + std::to_string(g + 1));
    for (std::size_t m = 0; m < opts.attributes; ++m) attributes.push_back("m" + std::to_string(m + 1));
    std::vector<std::vector<bool>> inc(opts.objects, std::vector<bool>(opts.attributes, false));
    for (auto& row : inc)
        for (std::size_t m = 0; m < row.size(); ++m) row[m] = rng.chance(p);
    return FormalContext(std::move(objects), std::move(attributes), inc, "random");
}

FormalContext random_context(std::uint64_t seed, const RandomContextOptions& opts) {
    InstanceRng rng(seed);
    return random_context(rng, opts);
}

FiniteTopology random_topology(InstanceRng& rng, std::size_t n) {
    const std::size_t k = rng.between(0, n + 1);
    std::vector<GroundSet> subbase;
    for (std::size_t i = 0; i < k; ++i) {
        GroundSet s(n);
        for (std::size_t x = 0; x < n; ++x)
            if (rng.chance(0.5)) s.set(x);
        subbase.push_back(std::move(s));
    }
    return generate_from_closed_subbase(n, subbase);
}

Cts random_cts(InstanceRng& rng, const RandomContextOptions& opts) {
    auto ctx = random_context(rng, opts);
    auto tau = random_topology(rng, opts.objects);
    auto rho = random_topology(rng, opts.attributes);
    return Cts(std::move(ctx), std::move(tau), std::move(rho));
}

}  // namespace dbatk
