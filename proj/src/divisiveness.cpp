#include "divisive/divisiveness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace divisive {

void DivisivenessParams::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
    if (!(ell > 0.0)) throw std::domain_error("ell must be positive");
}

double div_pair(Issue a, const SubPopulation& x, const Profile& p, ScoringRule rule) {
    if (x.universe() != p.num_agents()) throw std::invalid_argument("sub-population universe does not match the profile");
    if (x.empty() || x.full()) return 0.0;
    return std::abs(score(rule, a, restrict(p, x)) - score(rule, a, restrict(p, x.complement())));
}

double alpha_factor(Issue a, Issue b, const Profile& p, double ell, double alpha) {
    const double n = static_cast<double>(p.num_agents());
    const double for_a = static_cast<double>(supporters(p, a, b).size());
    return std::pow(ell * for_a * (n - for_a) / (n * n), alpha);
}

namespace {

// Identical rankings merged; scores are anonymous so this changes nothing
// but the work per pair.
struct Group {
    std::size_t weight;
    const Ranking* ranking;
};

std::vector<Group> compact(const Profile& p) {
    std::map<std::vector<Issue>, std::size_t> index;
    std::vector<Group> groups;
    for (const auto& e : p.entries()) {
        auto [it, inserted] = index.try_emplace(e.ranking.order(), groups.size());
        if (inserted) {
            groups.push_back({e.weight, &e.ranking});
        } else {
            groups[it->second].weight += e.weight;
        }
    }
    return groups;
}

void require_measurable(const Profile& p, const DivisivenessParams& params) {
    params.validate();
    if (p.empty()) throw UndefinedScoreError("divisiveness of an empty profile is undefined");
    if (p.num_issues() < 2) throw std::domain_error("divisiveness needs at least two issues");
}

// |s(a, P_{a>b}) - s(a, P_{b>a})| for one pair, assuming both sides are non-empty.
double pair_gap(Issue a, Issue b, const std::vector<Group>& groups, std::size_t m, std::size_t n_x, std::size_t n_y,
                ScoringRule rule) {
    if (rule == ScoringRule::Copeland) {
        long long cop_x = 0;
        long long cop_y = 0;
        for (Issue c = 0; c < m; ++c) {
            if (c == a) continue;
            std::size_t win_x = 0;
            std::size_t win_y = 0;
            for (const auto& g : groups) {
                if (!g.ranking->prefers(a, c)) continue;
                if (g.ranking->prefers(a, b)) {
                    win_x += g.weight;
                } else {
                    win_y += g.weight;
                }
            }
            cop_x += 2 * win_x > n_x ? 1 : 0;
            cop_y += 2 * win_y > n_y ? 1 : 0;
        }
        return static_cast<double>(std::llabs(cop_x - cop_y)) / static_cast<double>(m - 1);
    }
    // Borda (and win rate, which coincides on complete rankings): exact
    // rational |s_x / n_x - s_y / n_y| / (m - 1) with a single rounding.
    long long s_x = 0;
    long long s_y = 0;
    for (const auto& g : groups) {
        const auto below = static_cast<long long>(g.weight * (m - 1 - g.ranking->position(a)));
        if (g.ranking->prefers(a, b)) {
            s_x += below;
        } else {
            s_y += below;
        }
    }
    const long long nx = static_cast<long long>(n_x);
    const long long ny = static_cast<long long>(n_y);
    const long long numerator = std::llabs(s_x * ny - s_y * nx);
    return static_cast<double>(numerator) / (static_cast<double>(nx * ny) * static_cast<double>(m - 1));
}

double divisiveness_of(Issue a, const std::vector<Group>& groups, std::size_t m, std::size_t n,
                       const DivisivenessParams& params) {
    double total = 0.0;
    for (Issue b = 0; b < m; ++b) {
        if (b == a) continue;
        std::size_t n_x = 0;
        for (const auto& g : groups) {
            if (g.ranking->prefers(a, b)) n_x += g.weight;
        }
        const std::size_t n_y = n - n_x;
        if (n_x == 0 || n_y == 0) continue;
        double factor = 1.0;
        if (params.alpha != 0.0) {
            const double nn = static_cast<double>(n);
            factor = std::pow(params.ell * static_cast<double>(n_x) * static_cast<double>(n_y) / (nn * nn), params.alpha);
        }
        total += factor * pair_gap(a, b, groups, m, n_x, n_y, params.rule);
    }
    return total / static_cast<double>(m - 1);
}

}  // namespace

double divisiveness(Issue a, const Profile& p, const DivisivenessParams& params) {
    require_measurable(p, params);
    if (a >= p.num_issues()) throw std::domain_error("issue outside the profile's issue set");
    return divisiveness_of(a, compact(p), p.num_issues(), p.num_agents(), params);
}

std::vector<double> divisiveness_scores(const Profile& p, const DivisivenessParams& params) {
    require_measurable(p, params);
    const auto groups = compact(p);
    std::vector<double> out(p.num_issues());
    for (Issue a = 0; a < p.num_issues(); ++a) out[a] = divisiveness_of(a, groups, p.num_issues(), p.num_agents(), params);
    return out;
}

ScoredRanking divisiveness_ranking(const Profile& p, const DivisivenessParams& params) {
    return ScoredRanking(divisiveness_scores(p, params));
}

double rank_variance(Issue a, const Profile& p) {
    if (p.empty()) throw UndefinedScoreError("rank variance of an empty profile is undefined");
    if (a >= p.num_issues()) throw std::domain_error("issue outside the profile's issue set");
    const double n = static_cast<double>(p.num_agents());
    double sum = 0.0;
    for (const auto& e : p.entries()) sum += static_cast<double>(e.weight * rank_of(e.ranking, a));
    const double mean = sum / n;
    double squares = 0.0;
    for (const auto& e : p.entries()) {
        const double d = static_cast<double>(rank_of(e.ranking, a)) - mean;
        squares += static_cast<double>(e.weight) * d * d;
    }
    return squares / n;
}

std::vector<double> rank_variances(const Profile& p) {
    std::vector<double> out(p.num_issues());
    for (Issue a = 0; a < p.num_issues(); ++a) out[a] = rank_variance(a, p);
    return out;
}

SplitResult max_divided_subpopulation(Issue a, const Profile& p, ScoringRule rule) {
    if (rule == ScoringRule::Copeland) {
        throw std::domain_error("maximally divided sub-populations are only available for Borda");
    }
    const std::size_t n = p.num_agents();
    const std::size_t m = p.num_issues();
    if (n < 2) throw std::domain_error("a split needs at least two agents");
    if (a >= m) throw std::domain_error("issue outside the profile's issue set");
    if (m < 2) throw std::domain_error("a split needs at least two issues");

    std::vector<std::size_t> position(n);
    {
        std::size_t agent = 0;
        for (const auto& e : p.entries()) {
            for (std::size_t k = 0; k < e.weight; ++k) position[agent++] = e.ranking.position(a);
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return position[i] > position[j]; });

    std::size_t total = 0;
    for (auto pos : position) total += m - 1 - pos;

    // Compare |s_x (n-k) - s_y k| / (k (n-k)) exactly across prefixes.
    __extension__ typedef unsigned __int128 Wide;
    std::size_t best_k = 1;
    Wide best_num = 0;
    Wide best_den = 1;
    std::size_t s_x = 0;
    for (std::size_t k = 1; k < n; ++k) {
        s_x += m - 1 - position[order[k - 1]];
        const std::size_t s_y = total - s_x;
        const Wide lhs = static_cast<Wide>(s_x) * (n - k);
        const Wide rhs = static_cast<Wide>(s_y) * k;
        const Wide num = lhs > rhs ? lhs - rhs : rhs - lhs;
        const Wide den = static_cast<Wide>(k) * (n - k);
        if (k == 1 || num * best_den > best_num * den) {
            best_k = k;
            best_num = num;
            best_den = den;
        }
    }

    SplitResult result;
    result.issue = a;
    result.subpopulation = SubPopulation(std::vector<std::size_t>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_k)), n);
    // One rounding of the exact gap, so equal rationals give equal doubles.
    result.value = static_cast<double>(best_num) / static_cast<double>(best_den * (m - 1));
    return result;
}

}  // namespace divisive
