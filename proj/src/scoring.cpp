#include "divisive/scoring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace divisive {

std::string to_string(ScoringRule rule) {
    switch (rule) {
        case ScoringRule::Borda: return "borda";
        case ScoringRule::Copeland: return "copeland";
        case ScoringRule::WinRate: return "winrate";
    }
    return "unknown";
}

ScoringRule parse_rule(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "borda") return ScoringRule::Borda;
    if (lower == "copeland" || lower == "cop") return ScoringRule::Copeland;
    if (lower == "winrate" || lower == "win-rate" || lower == "win_rate") return ScoringRule::WinRate;
    throw std::invalid_argument("unknown scoring rule '" + std::string(name) + "'");
}

namespace {

void require_scorable(Issue a, std::size_t m, bool empty) {
    if (empty) throw UndefinedScoreError("score of an issue in an empty profile is undefined");
    if (a >= m) throw std::domain_error("issue outside the profile's issue set");
    if (m < 2) throw std::domain_error("scores need at least two issues");
}

}  // namespace

double borda(Issue a, const Profile& p) {
    const std::size_t m = p.num_issues();
    require_scorable(a, m, p.empty());
    // Integer numerator so equal rationals give identical doubles.
    std::size_t below = 0;
    for (const auto& e : p.entries()) below += e.weight * (m - 1 - e.ranking.position(a));
    return static_cast<double>(below) / static_cast<double>(p.num_agents() * (m - 1));
}

double copeland(Issue a, const Profile& p) {
    const std::size_t m = p.num_issues();
    require_scorable(a, m, p.empty());
    std::size_t wins = 0;
    for (Issue b = 0; b < m; ++b) {
        if (b == a) continue;
        std::size_t for_a = 0;
        for (const auto& e : p.entries()) {
            if (e.ranking.prefers(a, b)) for_a += e.weight;
        }
        if (2 * for_a > p.num_agents()) ++wins;
    }
    return static_cast<double>(wins) / static_cast<double>(m - 1);
}

double score(ScoringRule rule, Issue a, const Profile& p) {
    switch (rule) {
        case ScoringRule::Borda:
        case ScoringRule::WinRate: return borda(a, p);
        case ScoringRule::Copeland: return copeland(a, p);
    }
    throw std::invalid_argument("unknown scoring rule");
}

double win_rate(Issue a, const PairwiseProfile& q) {
    const std::size_t m = q.num_issues();
    require_scorable(a, m, q.num_agents() == 0);
    double total = 0.0;
    for (Issue b = 0; b < m; ++b) {
        if (b == a) continue;
        std::size_t wins = 0;
        std::size_t compared = 0;
        for (std::size_t i = 0; i < q.num_agents(); ++i) {
            const auto c = q.cell(i, a, b);
            wins += c > 0 ? 1 : 0;
            compared += c != 0 ? 1 : 0;
        }
        if (compared > 0) total += static_cast<double>(wins) / static_cast<double>(compared);
    }
    return total / static_cast<double>(m - 1);
}

double copeland(Issue a, const PairwiseProfile& q) {
    const std::size_t m = q.num_issues();
    require_scorable(a, m, q.num_agents() == 0);
    std::size_t wins = 0;
    for (Issue b = 0; b < m; ++b) {
        if (b == a) continue;
        long margin = 0;
        for (std::size_t i = 0; i < q.num_agents(); ++i) margin += q.cell(i, a, b);
        if (margin > 0) ++wins;
    }
    return static_cast<double>(wins) / static_cast<double>(m - 1);
}

double score(ScoringRule rule, Issue a, const PairwiseProfile& q) {
    switch (rule) {
        case ScoringRule::Borda:
        case ScoringRule::WinRate: return win_rate(a, q);
        case ScoringRule::Copeland: return copeland(a, q);
    }
    throw std::invalid_argument("unknown scoring rule");
}

std::vector<double> scores(ScoringRule rule, const Profile& p) {
    std::vector<double> out(p.num_issues());
    for (Issue a = 0; a < p.num_issues(); ++a) out[a] = score(rule, a, p);
    return out;
}

ScoredRanking::ScoredRanking(const std::vector<double>& scores_by_issue) {
    items_.reserve(scores_by_issue.size());
    std::vector<long long> key(scores_by_issue.size());
    for (Issue a = 0; a < scores_by_issue.size(); ++a) {
        items_.push_back({a, scores_by_issue[a]});
        key[a] = std::llround(scores_by_issue[a] / kScoreTieTolerance);
    }
    std::sort(items_.begin(), items_.end(), [&](const ScoredIssue& x, const ScoredIssue& y) {
        if (key[x.issue] != key[y.issue]) return key[x.issue] > key[y.issue];
        return x.issue < y.issue;
    });
}

std::size_t ScoredRanking::position_of(Issue a) const {
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (items_[i].issue == a) return i + 1;
    }
    throw std::domain_error("issue not in ranking");
}

Ranking ScoredRanking::ranking() const {
    std::vector<Issue> order;
    order.reserve(items_.size());
    for (const auto& item : items_) order.push_back(item.issue);
    return Ranking(std::move(order));
}

ScoredRanking agreement_ranking(const Profile& p, ScoringRule rule) { return ScoredRanking(scores(rule, p)); }

}  // namespace divisive
