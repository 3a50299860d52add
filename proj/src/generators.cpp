#include "divisive/generators.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace divisive {

namespace {

void require_shape(std::size_t m, std::size_t n) {
    if (m < 2) throw std::domain_error("a culture needs at least two issues");
    if (n < 1) throw std::domain_error("a culture needs at least one agent");
}

double factorial(std::size_t m) {
    double f = 1.0;
    for (std::size_t k = 2; k <= m; ++k) f *= static_cast<double>(k);
    return f;
}

// Agents keep draw order; identical consecutive draws are not merged so
// agent i is always the i-th draw.
Profile from_draws(std::size_t m, std::vector<Ranking> draws) {
    std::vector<WeightedRanking> entries;
    entries.reserve(draws.size());
    for (auto& r : draws) entries.push_back({1, std::move(r)});
    return Profile(Profile::default_labels(m), std::move(entries));
}

}  // namespace

Profile generate_ic(std::size_t m, std::size_t n, std::uint64_t seed) {
    require_shape(m, n);
    std::mt19937_64 rng(seed);
    std::vector<Ranking> draws;
    draws.reserve(n);
    for (std::size_t i = 0; i < n; ++i) draws.push_back(random_ranking(m, rng));
    return from_draws(m, std::move(draws));
}

double urn_replacement(std::size_t m, double correlation) {
    if (!(correlation >= 0.0 && correlation < 1.0)) throw std::domain_error("urn correlation must lie in [0, 1)");
    return std::round(factorial(m) * correlation / (1.0 - correlation));
}

Profile generate_urn(std::size_t m, std::size_t n, double correlation, std::uint64_t seed) {
    require_shape(m, n);
    const double copies = urn_replacement(m, correlation);
    const double fresh_weight = factorial(m);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Ranking> draws;
    draws.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double reinforced = copies * static_cast<double>(t);
        if (reinforced == 0.0 || unit(rng) * (fresh_weight + reinforced) < fresh_weight) {
            draws.push_back(random_ranking(m, rng));
        } else {
            std::uniform_int_distribution<std::size_t> earlier(0, t - 1);
            draws.push_back(draws[earlier(rng)]);
        }
    }
    return from_draws(m, std::move(draws));
}

Profile generate(const Culture& culture) {
    if (culture.m > kMaxRecommendedIssues) {
        std::clog << "warning: " << culture.m << " issues exceeds the recommended maximum of " << kMaxRecommendedIssues
                  << " for urn cultures\n";
    }
    switch (culture.kind) {
        case CultureKind::ImpartialCulture: return generate_ic(culture.m, culture.n, culture.seed);
        case CultureKind::Urn: return generate_urn(culture.m, culture.n, culture.correlation, culture.seed);
    }
    throw std::invalid_argument("unknown culture");
}

}  // namespace divisive
