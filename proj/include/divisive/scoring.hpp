#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "divisive/core.hpp"
#include "divisive/pairwise.hpp"

namespace divisive {

/// Normalised issue scores in [0, 1]. WinRate is the incomplete-data
/// generalisation of Borda; on a complete Profile it is Borda.
enum class ScoringRule { Borda, Copeland, WinRate };

std::string to_string(ScoringRule rule);

/// Accepts "borda", "copeland", "winrate" (case-insensitive). Throws std::invalid_argument.
ScoringRule parse_rule(std::string_view name);

/// Thrown when a score is requested on the empty-profile marker.
class UndefinedScoreError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sum over b != a of #N_{a>b} / (n (m-1)).
double borda(Issue a, const Profile& p);

/// Share of the m-1 other issues that `a` beats by strict majority.
double copeland(Issue a, const Profile& p);

double score(ScoringRule rule, Issue a, const Profile& p);

/// Per-pair share of comparers preferring `a`, averaged over the m-1 pairs.
/// A pair nobody compared contributes 0.
double win_rate(Issue a, const PairwiseProfile& q);

/// Copeland from the available comparisons: `a` beats b when strictly more
/// agents hold (a, b) than (b, a).
double copeland(Issue a, const PairwiseProfile& q);

double score(ScoringRule rule, Issue a, const PairwiseProfile& q);

/// Scores of every issue, indexed by issue id.
std::vector<double> scores(ScoringRule rule, const Profile& p);

struct ScoredIssue {
    Issue issue;
    double score;

    bool operator==(const ScoredIssue&) const = default;
};

/// Issues by descending score; ties (within 1e-12) go to the lower issue id.
class ScoredRanking {
public:
    ScoredRanking() = default;
    explicit ScoredRanking(const std::vector<double>& scores_by_issue);

    std::size_t size() const { return items_.size(); }
    const std::vector<ScoredIssue>& items() const { return items_; }
    const ScoredIssue& operator[](std::size_t i) const { return items_[i]; }

    Issue top() const { return items_.front().issue; }

    /// 1-based position of `a`.
    std::size_t position_of(Issue a) const;

    /// The order as a Ranking.
    Ranking ranking() const;

private:
    std::vector<ScoredIssue> items_;
};

/// Tolerance under which two scores count as tied.
inline constexpr double kScoreTieTolerance = 1e-12;

/// The agreement ranking induced by `rule`.
ScoredRanking agreement_ranking(const Profile& p, ScoringRule rule);

}  // namespace divisive
