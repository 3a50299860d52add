#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "divisive/core.hpp"

namespace divisive {

/// Per-agent sets of pairwise comparisons over a shared issue set, possibly
/// incomplete. Agent i holding (a, b) means a is preferred to b by i.
class PairwiseProfile {
public:
    PairwiseProfile() = default;

    /// An agent with no comparisons at all for each of the `num_agents` agents.
    PairwiseProfile(std::vector<std::string> labels, std::size_t num_agents);

    /// All m(m-1)/2 comparisons of every agent of a complete profile.
    static PairwiseProfile from_profile(const Profile& p);

    std::size_t num_issues() const { return labels_.size(); }
    std::size_t num_agents() const { return num_agents_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Records a > b for `agent`. Throws std::invalid_argument if the agent
    /// already holds b > a, or if a == b.
    void add(std::size_t agent, Issue a, Issue b);

    bool holds(std::size_t agent, Issue a, Issue b) const { return cell(agent, a, b) > 0; }
    bool compared(std::size_t agent, Issue a, Issue b) const { return cell(agent, a, b) != 0; }

    /// The agents holding (a, b).
    SubPopulation holders(Issue a, Issue b) const;

    std::vector<std::pair<Issue, Issue>> comparisons(std::size_t agent) const;
    std::size_t num_comparisons() const;

    /// Copy keeping only the listed agents, renumbered in order.
    PairwiseProfile restrict(const SubPopulation& x) const;

    /// +1 if the agent holds (a, b), -1 if it holds (b, a), 0 otherwise.
    std::int8_t cell(std::size_t agent, Issue a, Issue b) const {
        return relation_[(agent * labels_.size() + a) * labels_.size() + b];
    }

private:
    std::vector<std::string> labels_;
    std::size_t num_agents_ = 0;
    std::vector<std::int8_t> relation_;
};

}  // namespace divisive
