#include "divisive/pairwise.hpp"

#include <algorithm>
#include <stdexcept>

namespace divisive {

PairwiseProfile::PairwiseProfile(std::vector<std::string> labels, std::size_t num_agents)
    : labels_(std::move(labels)), num_agents_(num_agents), relation_(num_agents * labels_.size() * labels_.size(), 0) {}

PairwiseProfile PairwiseProfile::from_profile(const Profile& p) {
    PairwiseProfile q(p.labels(), p.num_agents());
    const std::size_t m = p.num_issues();
    std::size_t agent = 0;
    for (const auto& e : p.entries()) {
        for (std::size_t k = 0; k < e.weight; ++k, ++agent) {
            for (Issue a = 0; a < m; ++a) {
                for (Issue b = a + 1; b < m; ++b) {
                    if (e.ranking.prefers(a, b)) {
                        q.add(agent, a, b);
                    } else {
                        q.add(agent, b, a);
                    }
                }
            }
        }
    }
    return q;
}

void PairwiseProfile::add(std::size_t agent, Issue a, Issue b) {
    const std::size_t m = labels_.size();
    if (agent >= num_agents_ || a >= m || b >= m) throw std::out_of_range("comparison outside the profile");
    if (a == b) throw std::invalid_argument("an issue cannot be compared with itself");
    auto& forward = relation_[(agent * m + a) * m + b];
    auto& backward = relation_[(agent * m + b) * m + a];
    if (forward < 0) throw std::invalid_argument("agent already holds the opposite comparison");
    forward = 1;
    backward = -1;
}

SubPopulation PairwiseProfile::holders(Issue a, Issue b) const {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < num_agents_; ++i) {
        if (holds(i, a, b)) members.push_back(i);
    }
    return SubPopulation(std::move(members), num_agents_);
}

std::vector<std::pair<Issue, Issue>> PairwiseProfile::comparisons(std::size_t agent) const {
    std::vector<std::pair<Issue, Issue>> out;
    const std::size_t m = labels_.size();
    for (Issue a = 0; a < m; ++a) {
        for (Issue b = 0; b < m; ++b) {
            if (holds(agent, a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

std::size_t PairwiseProfile::num_comparisons() const {
    std::size_t count = 0;
    for (auto v : relation_) count += v > 0 ? 1 : 0;
    return count;
}

PairwiseProfile PairwiseProfile::restrict(const SubPopulation& x) const {
    if (x.universe() != num_agents_) throw std::invalid_argument("sub-population universe does not match the profile");
    PairwiseProfile out(labels_, x.size());
    const std::size_t stride = labels_.size() * labels_.size();
    for (std::size_t k = 0; k < x.size(); ++k) {
        const auto src = relation_.begin() + static_cast<std::ptrdiff_t>(x.members()[k] * stride);
        std::copy(src, src + static_cast<std::ptrdiff_t>(stride), out.relation_.begin() + static_cast<std::ptrdiff_t>(k * stride));
    }
    return out;
}

}  // namespace divisive
