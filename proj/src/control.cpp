#include "divisive/control.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace divisive {

PairwiseProfile remove_comparisons(const Profile& p, double retain_fraction, std::uint64_t seed) {
    if (!(retain_fraction > 0.0 && retain_fraction <= 1.0)) {
        throw std::domain_error("retain fraction must lie in (0, 1]");
    }
    const std::size_t m = p.num_issues();
    const std::size_t n = p.num_agents();
    const std::size_t per_agent = m * (m - 1) / 2;
    const std::size_t total = n * per_agent;
    const auto keep = static_cast<std::size_t>(std::llround(retain_fraction * static_cast<double>(total)));

    // Comparison k belongs to agent k / per_agent and to the k % per_agent-th
    // unordered pair in lexicographic order.
    std::vector<std::size_t> picks(total);
    std::iota(picks.begin(), picks.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < keep; ++i) {
        std::uniform_int_distribution<std::size_t> dist(i, total - 1);
        std::swap(picks[i], picks[dist(rng)]);
    }
    picks.resize(keep);
    std::sort(picks.begin(), picks.end());

    std::vector<std::pair<Issue, Issue>> pairs;
    pairs.reserve(per_agent);
    for (Issue a = 0; a < m; ++a) {
        for (Issue b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
    }

    PairwiseProfile q(p.labels(), n);
    for (auto k : picks) {
        const std::size_t agent = k / per_agent;
        const auto [a, b] = pairs[k % per_agent];
        const Ranking& r = p.agent(agent);
        if (r.prefers(a, b)) {
            q.add(agent, a, b);
        } else {
            q.add(agent, b, a);
        }
    }
    return q;
}

namespace {

double side_score(Issue a, const std::vector<std::size_t>& side, const PairwiseProfile& q, ScoringRule rule) {
    const std::size_t m = q.num_issues();
    if (rule == ScoringRule::Copeland) {
        std::size_t wins = 0;
        for (Issue c = 0; c < m; ++c) {
            if (c == a) continue;
            long margin = 0;
            for (auto i : side) margin += q.cell(i, a, c);
            wins += margin > 0 ? 1 : 0;
        }
        return static_cast<double>(wins) / static_cast<double>(m - 1);
    }
    double total = 0.0;
    for (Issue c = 0; c < m; ++c) {
        if (c == a) continue;
        std::size_t wins = 0;
        std::size_t compared = 0;
        for (auto i : side) {
            const auto v = q.cell(i, a, c);
            wins += v > 0 ? 1 : 0;
            compared += v != 0 ? 1 : 0;
        }
        if (compared > 0) total += static_cast<double>(wins) / static_cast<double>(compared);
    }
    return total / static_cast<double>(m - 1);
}

}  // namespace

double incomplete_divisiveness(Issue a, const PairwiseProfile& q, ScoringRule rule) {
    const std::size_t m = q.num_issues();
    if (q.num_agents() == 0) throw UndefinedScoreError("divisiveness of an empty profile is undefined");
    if (m < 2) throw std::domain_error("divisiveness needs at least two issues");
    if (a >= m) throw std::domain_error("issue outside the profile's issue set");
    std::vector<std::size_t> for_a;
    std::vector<std::size_t> for_b;
    double total = 0.0;
    for (Issue b = 0; b < m; ++b) {
        if (b == a) continue;
        for_a.clear();
        for_b.clear();
        for (std::size_t i = 0; i < q.num_agents(); ++i) {
            const auto v = q.cell(i, a, b);
            if (v > 0) for_a.push_back(i);
            if (v < 0) for_b.push_back(i);
        }
        if (for_a.empty() || for_b.empty()) continue;
        total += std::abs(side_score(a, for_a, q, rule) - side_score(a, for_b, q, rule));
    }
    return total / static_cast<double>(m - 1);
}

std::vector<double> incomplete_divisiveness_scores(const PairwiseProfile& q, ScoringRule rule) {
    std::vector<double> out(q.num_issues());
    for (Issue a = 0; a < q.num_issues(); ++a) out[a] = incomplete_divisiveness(a, q, rule);
    return out;
}

InjectRankings build_inject_rankings(const Profile& p, Issue target, ScoringRule rule) {
    if (target >= p.num_issues()) throw std::domain_error("target outside the profile's issue set");
    const Ranking agreement = agreement_ranking(p, rule).ranking();
    std::vector<Issue> rest;
    rest.reserve(p.num_issues() - 1);
    for (Issue x : agreement.order()) {
        if (x != target) rest.push_back(x);
    }
    std::vector<Issue> odd{target};
    odd.insert(odd.end(), rest.begin(), rest.end());
    std::vector<Issue> even = rest;
    even.push_back(target);
    return {Ranking(std::move(odd)), Ranking(std::move(even))};
}

InjectOutcome inject(const Profile& p, Issue target, const DivisivenessParams& params, std::size_t max_rounds) {
    params.validate();
    if (params.alpha != 0.0) throw std::domain_error("inject is defined for alpha = 0");
    if (max_rounds < 1) throw std::domain_error("max_rounds must be at least 1");
    if (target >= p.num_issues()) throw std::domain_error("target outside the profile's issue set");

    const auto [odd, even] = build_inject_rankings(p, target, params.rule);
    const std::vector<WeightedRanking> base(p.entries().begin(), p.entries().end());

    InjectOutcome outcome;
    outcome.trace.push_back(divisiveness_ranking(p, params));
    outcome.succeeded = outcome.trace.back().top() == target;

    // Scores are anonymous, so the working profile keeps the injected agents
    // as two weighted entries instead of one entry per round.
    std::size_t odd_count = 0;
    std::size_t even_count = 0;
    while (!outcome.succeeded && outcome.rounds < max_rounds) {
        ++outcome.rounds;
        (outcome.rounds % 2 == 1 ? odd_count : even_count) += 1;
        auto entries = base;
        entries.push_back({odd_count, odd});
        if (even_count > 0) entries.push_back({even_count, even});
        const Profile working(p.labels(), std::move(entries));
        outcome.trace.push_back(divisiveness_ranking(working, params));
        outcome.succeeded = outcome.trace.back().top() == target;
    }

    auto entries = base;
    for (std::size_t r = 1; r <= outcome.rounds; ++r) entries.push_back({1, r % 2 == 1 ? odd : even});
    outcome.final_profile = Profile(p.labels(), std::move(entries));
    return outcome;
}

}  // namespace divisive
