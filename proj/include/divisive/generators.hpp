#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "divisive/core.hpp"

namespace divisive {

enum class CultureKind { ImpartialCulture, Urn };

/// A synthetic profile distribution.
struct Culture {
    CultureKind kind = CultureKind::ImpartialCulture;
    double correlation = 0.0;  ///< urn only, in [0, 1)
    std::size_t m = 2;
    std::size_t n = 1;
    std::uint64_t seed = 0;
};

/// Beyond this many issues the urn's m! bookkeeping loses exactness.
inline constexpr std::size_t kMaxRecommendedIssues = 18;

/// n independent uniform draws from the m! strict rankings. Requires m >= 2, n >= 1.
Profile generate_ic(std::size_t m, std::size_t n, std::uint64_t seed);

/// Extra copies returned to the urn after each draw: round(m! corr / (1 - corr)).
double urn_replacement(std::size_t m, double correlation);

/// Polya urn starting from one copy of each of the m! rankings; each draw
/// is put back with urn_replacement() extra copies. The urn is kept lazily:
/// a draw is fresh-uniform with probability m! / (m! + t c) after t draws,
/// otherwise a uniformly chosen earlier draw.
Profile generate_urn(std::size_t m, std::size_t n, double correlation, std::uint64_t seed);

/// Dispatches on culture.kind; warns on std::clog when m exceeds kMaxRecommendedIssues.
Profile generate(const Culture& culture);

/// Uniform random permutation of 0..m-1.
template <class Rng>
Ranking random_ranking(std::size_t m, Rng& rng) {
    std::vector<Issue> order(m);
    std::iota(order.begin(), order.end(), Issue{0});
    for (std::size_t i = m; i > 1; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        std::swap(order[i - 1], order[pick(rng)]);
    }
    return Ranking(std::move(order));
}

}  // namespace divisive
