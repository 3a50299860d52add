#include "divisive/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace divisive {

Ranking::Ranking(std::vector<Issue> order) : order_(std::move(order)), position_(order_.size(), order_.size()) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const Issue a = order_[i];
        if (a >= order_.size() || position_[a] != order_.size()) {
            throw std::invalid_argument("ranking is not a permutation of 0..m-1");
        }
        position_[a] = i;
    }
}

std::size_t rank_of(const Ranking& r, Issue a) {
    if (a >= r.size()) {
        throw std::domain_error("issue " + std::to_string(a) + " is not in the ranking");
    }
    return r.position(a) + 1;
}

SubPopulation::SubPopulation(std::vector<std::size_t> members, std::size_t universe)
    : members_(std::move(members)), universe_(universe) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw std::invalid_argument("duplicate agent in sub-population");
    }
    if (!members_.empty() && members_.back() >= universe_) {
        throw std::invalid_argument("agent index outside the population");
    }
}

SubPopulation SubPopulation::everyone(std::size_t universe) {
    std::vector<std::size_t> all(universe);
    for (std::size_t i = 0; i < universe; ++i) all[i] = i;
    return SubPopulation(std::move(all), universe);
}

bool SubPopulation::contains(std::size_t agent) const {
    return std::binary_search(members_.begin(), members_.end(), agent);
}

SubPopulation SubPopulation::complement() const {
    std::vector<std::size_t> rest;
    rest.reserve(universe_ - members_.size());
    auto it = members_.begin();
    for (std::size_t i = 0; i < universe_; ++i) {
        if (it != members_.end() && *it == i) {
            ++it;
        } else {
            rest.push_back(i);
        }
    }
    return SubPopulation(std::move(rest), universe_);
}

Profile::Profile(std::vector<std::string> labels, std::vector<WeightedRanking> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
    offsets_.reserve(entries_.size() + 1);
    offsets_.push_back(0);
    for (const auto& e : entries_) {
        if (e.weight == 0) throw std::invalid_argument("profile entry with zero weight");
        if (e.ranking.size() != labels_.size()) {
            throw std::invalid_argument("ranking over " + std::to_string(e.ranking.size()) + " issues in a profile over " +
                                        std::to_string(labels_.size()));
        }
        offsets_.push_back(offsets_.back() + e.weight);
    }
}

std::vector<std::string> Profile::default_labels(std::size_t m) {
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = std::to_string(i + 1);
    return labels;
}

const Ranking& Profile::agent(std::size_t agent) const {
    if (agent >= num_agents()) throw std::out_of_range("agent index outside the population");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), agent);
    return entries_[static_cast<std::size_t>(it - offsets_.begin()) - 1].ranking;
}

std::vector<Ranking> Profile::expanded() const {
    std::vector<Ranking> out;
    out.reserve(num_agents());
    for (const auto& e : entries_) out.insert(out.end(), e.weight, e.ranking);
    return out;
}

Profile Profile::with_added(const Ranking& ranking, std::size_t weight) const {
    auto entries = entries_;
    entries.push_back({weight, ranking});
    return Profile(labels_, std::move(entries));
}

bool Profile::same_agents(const Profile& other) const {
    return labels_ == other.labels_ && expanded() == other.expanded();
}

SubPopulation supporters(const Profile& p, Issue a, Issue b) {
    const std::size_t m = p.num_issues();
    if (a >= m || b >= m) throw std::domain_error("issue outside the profile's issue set");
    if (a == b) throw std::domain_error("supporters requires two distinct issues");
    std::vector<std::size_t> members;
    std::size_t agent = 0;
    for (const auto& e : p.entries()) {
        if (e.ranking.prefers(a, b)) {
            for (std::size_t k = 0; k < e.weight; ++k) members.push_back(agent + k);
        }
        agent += e.weight;
    }
    return SubPopulation(std::move(members), p.num_agents());
}

Profile restrict(const Profile& p, const SubPopulation& x) {
    if (x.universe() != p.num_agents()) {
        throw std::invalid_argument("sub-population universe does not match the profile");
    }
    std::vector<WeightedRanking> entries;
    auto it = x.members().begin();
    std::size_t first = 0;
    for (const auto& e : p.entries()) {
        const std::size_t last = first + e.weight;
        std::size_t taken = 0;
        while (it != x.members().end() && *it < last) {
            ++taken;
            ++it;
        }
        if (taken > 0) entries.push_back({taken, e.ranking});
        first = last;
    }
    return Profile(p.labels(), std::move(entries));
}

Issue find_issue(const Profile& p, const std::string& name) {
    const auto& labels = p.labels();
    if (auto it = std::find(labels.begin(), labels.end(), name); it != labels.end()) {
        return static_cast<Issue>(it - labels.begin());
    }
    std::size_t id = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), id);
    if (ec == std::errc() && ptr == name.data() + name.size() && id >= 1 && id <= labels.size()) {
        return id - 1;
    }
    throw std::domain_error("unknown issue '" + name + "'");
}

ParseError::ParseError(std::size_t line, const std::string& message, const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ": ") + (line > 0 ? "line " + std::to_string(line) + ": " : "") +
                         message),
      line_(line),
      message_(message) {}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::size_t parse_count(std::string_view field, std::size_t line, const char* what) {
    field = trim(field);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(field) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

Profile parse_profile(std::istream& in) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    {
        std::string raw;
        std::size_t number = 0;
        while (std::getline(in, raw)) {
            ++number;
            const auto t = trim(raw);
            if (t.empty() || t.front() == '#') continue;
            lines.emplace_back(number, std::string(t));
        }
    }
    std::size_t cursor = 0;
    auto next = [&](const char* what) -> const std::pair<std::size_t, std::string>& {
        if (cursor >= lines.size()) {
            const std::size_t at = lines.empty() ? 1 : lines.back().first + 1;
            throw ParseError(at, std::string("unexpected end of input, expected ") + what);
        }
        return lines[cursor++];
    };

    const auto& [m_line, m_text] = next("issue count");
    const std::size_t m = parse_count(m_text, m_line, "issue count");
    if (m == 0) throw ParseError(m_line, "issue count must be positive");

    std::vector<std::string> labels(m);
    std::vector<bool> seen(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& [ln, text] = next("issue line 'id,label'");
        const auto comma = text.find(',');
        if (comma == std::string::npos) throw ParseError(ln, "expected 'id,label'");
        const std::size_t id = parse_count(std::string_view(text).substr(0, comma), ln, "issue id");
        if (id < 1 || id > m) throw ParseError(ln, "issue id " + std::to_string(id) + " outside 1.." + std::to_string(m));
        if (seen[id - 1]) throw ParseError(ln, "duplicate issue id " + std::to_string(id));
        seen[id - 1] = true;
        labels[id - 1] = std::string(trim(std::string_view(text).substr(comma + 1)));
    }

    const auto& [h_line, h_text] = next("voter header 'n,n,lines'");
    const auto header = split(h_text, ',');
    if (header.size() != 3) throw ParseError(h_line, "expected voter header 'n,n,lines'");
    const std::size_t n = parse_count(header[0], h_line, "voter count");
    const std::size_t total = parse_count(header[1], h_line, "vote total");
    const std::size_t distinct = parse_count(header[2], h_line, "line count");

    std::vector<WeightedRanking> entries;
    std::size_t sum = 0;
    while (cursor < lines.size()) {
        const auto& [ln, text] = lines[cursor++];
        const auto colon = text.find(':');
        if (colon == std::string::npos) throw ParseError(ln, "expected 'weight: id,id,...'");
        const std::size_t weight = parse_count(std::string_view(text).substr(0, colon), ln, "weight");
        if (weight == 0) throw ParseError(ln, "weight must be positive");
        const auto ids = split(std::string_view(text).substr(colon + 1), ',');
        if (ids.size() != m) {
            throw ParseError(ln, "ranking lists " + std::to_string(ids.size()) + " issues, expected " + std::to_string(m));
        }
        std::vector<Issue> order;
        order.reserve(m);
        for (auto field : ids) {
            const std::size_t id = parse_count(field, ln, "issue id");
            if (id < 1 || id > m) throw ParseError(ln, "unknown issue id " + std::to_string(id));
            order.push_back(id - 1);
        }
        try {
            entries.push_back({weight, Ranking(std::move(order))});
        } catch (const std::invalid_argument&) {
            throw ParseError(ln, "ranking is not a permutation of the issues");
        }
        sum += weight;
    }
    const std::size_t end_line = lines.back().first;
    if (entries.empty()) throw ParseError(end_line + 1, "profile has no rankings");
    if (n != sum || total != sum) {
        throw ParseError(h_line, "header declares " + std::to_string(n) + " voters but rankings sum to " + std::to_string(sum));
    }
    if (distinct != entries.size()) {
        throw ParseError(h_line, "header declares " + std::to_string(distinct) + " ranking lines, found " +
                                     std::to_string(entries.size()));
    }
    return Profile(std::move(labels), std::move(entries));
}

Profile parse_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file", path);
    try {
        return parse_profile(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.message(), path);
    }
}

void write_profile(std::ostream& out, const Profile& p) {
    out << p.num_issues() << '\n';
    for (std::size_t i = 0; i < p.num_issues(); ++i) out << (i + 1) << ',' << p.labels()[i] << '\n';
    out << p.num_agents() << ',' << p.num_agents() << ',' << p.entries().size() << '\n';
    for (const auto& e : p.entries()) {
        out << e.weight << ':';
        const auto& order = e.ranking.order();
        for (std::size_t i = 0; i < order.size(); ++i) out << (i == 0 ? " " : ",") << (order[i] + 1);
        out << '\n';
    }
}

}  // namespace divisive
