#pragma once

#include <vector>

#include "divisive/core.hpp"
#include "divisive/scoring.hpp"

namespace divisive {

struct DivisivenessParams {
    double alpha = 0.0;  ///< in [0, 1]; 0 ignores sub-population sizes
    double ell = 4.0;    ///< normaliser; 4 caps every size factor at 1
    ScoringRule rule = ScoringRule::Borda;

    /// Throws std::domain_error when alpha is outside [0, 1] or ell <= 0.
    void validate() const;
};

/// |s(a, P_X) - s(a, P_{N\X})|, or 0 when X is empty or everyone.
double div_pair(Issue a, const SubPopulation& x, const Profile& p, ScoringRule rule);

/// (ell * #N_{a>b} * #N_{b>a} / n^2)^alpha.
double alpha_factor(Issue a, Issue b, const Profile& p, double ell, double alpha);

/// Mean over b != a of alpha_factor(a, b) * div_pair(a, N_{a>b}). A pair whose
/// supporter set is empty or everyone contributes 0.
double divisiveness(Issue a, const Profile& p, const DivisivenessParams& params = {});

/// divisiveness() for every issue, indexed by issue id.
std::vector<double> divisiveness_scores(const Profile& p, const DivisivenessParams& params = {});

ScoredRanking divisiveness_ranking(const Profile& p, const DivisivenessParams& params = {});

/// Population variance (divide by n) of the rank of `a` across agents.
double rank_variance(Issue a, const Profile& p);
std::vector<double> rank_variances(const Profile& p);

struct SplitResult {
    SubPopulation subpopulation;
    double value = 0.0;
    Issue issue = 0;
};

/// The sub-population X maximising div_pair(a, X, p, Borda).
///
/// Agents are sorted by the rank they give `a`, worst first (ties by agent
/// index), and only the n-1 prefixes of that order are tried: an optimal
/// split is always such a prefix. The smallest maximising prefix wins.
/// Throws std::domain_error for fewer than two agents or a non-Borda rule.
SplitResult max_divided_subpopulation(Issue a, const Profile& p, ScoringRule rule = ScoringRule::Borda);

}  // namespace divisive
