#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace divisive {

/// Dense issue index in 0..m-1.
using Issue = std::size_t;

/// A strict total order over m issues, most preferred first.
class Ranking {
public:
    Ranking() = default;

    /// Throws std::invalid_argument unless `order` is a permutation of 0..m-1.
    explicit Ranking(std::vector<Issue> order);

    std::size_t size() const { return order_.size(); }
    const std::vector<Issue>& order() const { return order_; }

    /// 0-based position of `a`; unchecked.
    std::size_t position(Issue a) const { return position_[a]; }

    bool prefers(Issue a, Issue b) const { return position_[a] < position_[b]; }

    bool operator==(const Ranking& other) const { return order_ == other.order_; }

private:
    std::vector<Issue> order_;
    std::vector<std::size_t> position_;
};

/// 1-based rank of `a` in `r`. Throws std::domain_error for an unknown issue.
std::size_t rank_of(const Ranking& r, Issue a);

struct WeightedRanking {
    std::size_t weight = 1;
    Ranking ranking;

    bool operator==(const WeightedRanking&) const = default;
};

/// A subset of agent indices (0-based) out of a population of `universe` agents.
class SubPopulation {
public:
    SubPopulation() = default;
    SubPopulation(std::vector<std::size_t> members, std::size_t universe);

    static SubPopulation everyone(std::size_t universe);

    const std::vector<std::size_t>& members() const { return members_; }
    std::size_t universe() const { return universe_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool full() const { return members_.size() == universe_; }
    bool contains(std::size_t agent) const;

    SubPopulation complement() const;

    bool operator==(const SubPopulation&) const = default;

private:
    std::vector<std::size_t> members_;
    std::size_t universe_ = 0;
};

/// A weighted profile of strict rankings over a shared issue set.
///
/// Agents are the weighted entries expanded in order: entry 0 contributes
/// agents 0..w0-1, entry 1 the next w1, and so on. A profile with no
/// entries is the empty-profile marker produced by restricting to an empty
/// sub-population; scoring functions reject it.
class Profile {
public:
    Profile() = default;

    /// Throws std::invalid_argument on zero weights or rankings over a
    /// different issue count than `labels`.
    Profile(std::vector<std::string> labels, std::vector<WeightedRanking> entries);

    /// Labels "1".."m".
    static std::vector<std::string> default_labels(std::size_t m);

    std::size_t num_issues() const { return labels_.size(); }
    std::size_t num_agents() const { return offsets_.empty() ? 0 : offsets_.back(); }
    bool empty() const { return entries_.empty(); }

    const std::vector<std::string>& labels() const { return labels_; }
    std::span<const WeightedRanking> entries() const { return entries_; }

    /// Ranking of the agent with expansion index `agent`.
    const Ranking& agent(std::size_t agent) const;

    /// One ranking per agent, in expansion order.
    std::vector<Ranking> expanded() const;

    /// Copy with `ranking` appended as a new entry (new agents go last).
    Profile with_added(const Ranking& ranking, std::size_t weight = 1) const;

    /// Equal as agent sequences, regardless of how weights are grouped.
    bool same_agents(const Profile& other) const;

    bool operator==(const Profile&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<WeightedRanking> entries_;
    std::vector<std::size_t> offsets_;  // offsets_[k] = agents in entries [0, k)
};

/// N_{a>b}: the agents ranking `a` above `b`. Throws std::domain_error if a == b
/// or either issue is out of range.
SubPopulation supporters(const Profile& p, Issue a, Issue b);

/// P_X. Consecutive agents sharing an entry stay grouped. Restricting to an
/// empty sub-population yields the empty-profile marker.
Profile restrict(const Profile& p, const SubPopulation& x);

/// Issue id for a label, or for a 1-based numeric id when no label matches.
/// Throws std::domain_error when neither resolves.
Issue find_issue(const Profile& p, const std::string& name);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message, const std::string& source = {});
    std::size_t line() const { return line_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::string message_;
};

/// Reads the strict-order-complete text format:
///
///     m
///     id,label        (m lines, ids 1..m)
///     n,n,lines
///     weight: id,id,...,id
///
/// Blank lines and lines starting with '#' are skipped.
Profile parse_profile(std::istream& in);
Profile parse_profile_file(const std::string& path);

void write_profile(std::ostream& out, const Profile& p);

}  // namespace divisive
