#pragma once

#include <cstdint>
#include <vector>

#include "divisive/core.hpp"
#include "divisive/divisiveness.hpp"
#include "divisive/pairwise.hpp"
#include "divisive/scoring.hpp"

namespace divisive {

/// Keeps round(retain_fraction * total) of the n m(m-1)/2 pairwise
/// comparisons, sampled uniformly without replacement across the whole
/// profile. Throws std::domain_error unless retain_fraction is in (0, 1].
PairwiseProfile remove_comparisons(const Profile& p, double retain_fraction, std::uint64_t seed);

/// Alpha = 0 divisiveness on possibly incomplete comparisons.
///
/// For each b != a the two sides are the agents holding (a, b) and those
/// holding (b, a); agents that never compared the pair sit on neither side.
/// Scores inside each side use win rate (for Borda/WinRate) or Copeland over
/// the available comparisons. A pair with an empty side contributes 0.
double incomplete_divisiveness(Issue a, const PairwiseProfile& q, ScoringRule rule);
std::vector<double> incomplete_divisiveness_scores(const PairwiseProfile& q, ScoringRule rule);

struct InjectRankings {
    Ranking odd;   ///< target first, the rest in agreement order
    Ranking even;  ///< the rest in agreement order, target last
};

InjectRankings build_inject_rankings(const Profile& p, Issue target, ScoringRule rule);

struct InjectOutcome {
    std::size_t rounds = 0;
    Profile final_profile;
    bool succeeded = false;
    /// Divisiveness ranking before any addition, then after each addition.
    std::vector<ScoredRanking> trace;
};

/// Adds the odd and even rankings alternately, odd first, one per round,
/// until `target` heads the divisiveness ranking or `max_rounds` additions
/// have been made. The agreement ranking is computed once from `p`.
/// Throws std::domain_error unless params.alpha == 0 and max_rounds >= 1.
InjectOutcome inject(const Profile& p, Issue target, const DivisivenessParams& params, std::size_t max_rounds);

}  // namespace divisive
