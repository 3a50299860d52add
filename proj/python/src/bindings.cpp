#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "divisive/control.hpp"
#include "divisive/divisiveness.hpp"
#include "divisive/generators.hpp"
#include "divisive/stats.hpp"

namespace py = pybind11;
using namespace divisive;

namespace {

Profile from_rankings(const std::vector<std::vector<Issue>>& rankings, std::vector<std::string> labels) {
    if (rankings.empty()) throw std::invalid_argument("a profile needs at least one ranking");
    if (labels.empty()) labels = Profile::default_labels(rankings.front().size());
    std::vector<WeightedRanking> entries;
    for (const auto& r : rankings) entries.push_back({1, Ranking(r)});
    return Profile(std::move(labels), std::move(entries));
}

Profile profile_from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_profile(in);
}

std::string profile_to_text(const Profile& p) {
    std::ostringstream out;
    write_profile(out, p);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Divisiveness and polarisation measures over profiles of strict rankings";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UndefinedTauError>(m, "UndefinedTauError", PyExc_ArithmeticError);
    py::register_exception<UndefinedScoreError>(m, "UndefinedScoreError", PyExc_ArithmeticError);

    py::enum_<ScoringRule>(m, "Rule")
        .value("BORDA", ScoringRule::Borda)
        .value("COPELAND", ScoringRule::Copeland)
        .value("WIN_RATE", ScoringRule::WinRate);

    py::class_<Profile>(m, "Profile")
        .def(py::init(&from_rankings), py::arg("rankings"), py::arg("labels") = std::vector<std::string>{},
             "One agent per ranking; each ranking lists 0-based issue ids, most preferred first.")
        .def_static("from_soc", &profile_from_text, py::arg("text"))
        .def_static("load", &parse_profile_file, py::arg("path"))
        .def("to_soc", &profile_to_text)
        .def_property_readonly("num_issues", &Profile::num_issues)
        .def_property_readonly("num_agents", &Profile::num_agents)
        .def_property_readonly("labels", &Profile::labels)
        .def("rankings", [](const Profile& p) {
            std::vector<std::vector<Issue>> out;
            for (const auto& r : p.expanded()) out.push_back(r.order());
            return out;
        })
        .def("__repr__", [](const Profile& p) {
            return "<Profile m=" + std::to_string(p.num_issues()) + " n=" + std::to_string(p.num_agents()) + ">";
        });

    m.def("scores", &scores, py::arg("rule"), py::arg("profile"));
    m.def(
        "divisiveness",
        [](const Profile& p, ScoringRule rule, double alpha, double ell) {
            return divisiveness_scores(p, {alpha, ell, rule});
        },
        py::arg("profile"), py::arg("rule") = ScoringRule::Borda, py::arg("alpha") = 0.0, py::arg("ell") = 4.0);
    m.def("rank_variances", &rank_variances, py::arg("profile"));
    m.def(
        "max_split",
        [](const Profile& p, Issue a) {
            const auto split = max_divided_subpopulation(a, p);
            return py::make_tuple(split.subpopulation.members(), split.value);
        },
        py::arg("profile"), py::arg("issue"), "(members, value) of the sub-population maximising the Borda gap.");
    m.def(
        "inject",
        [](const Profile& p, Issue target, ScoringRule rule, std::size_t max_rounds) {
            const auto outcome = inject(p, target, {0.0, 4.0, rule}, max_rounds);
            return py::make_tuple(outcome.rounds, outcome.succeeded, outcome.final_profile);
        },
        py::arg("profile"), py::arg("target"), py::arg("rule") = ScoringRule::Borda, py::arg("max_rounds") = 1000,
        "(rounds, succeeded, final_profile).");
    m.def(
        "deplete",
        [](const Profile& p, double retain, std::uint64_t seed, ScoringRule rule) {
            return incomplete_divisiveness_scores(remove_comparisons(p, retain, seed), rule);
        },
        py::arg("profile"), py::arg("retain"), py::arg("seed") = 0, py::arg("rule") = ScoringRule::WinRate,
        "Divisiveness after keeping a `retain` fraction of the pairwise comparisons.");
    m.def(
        "generate",
        [](const std::string& culture, std::size_t issues, std::size_t agents, std::uint64_t seed) {
            if (culture == "ic") return generate_ic(issues, agents, seed);
            if (culture == "um10") return generate_urn(issues, agents, 0.1, seed);
            if (culture == "um50") return generate_urn(issues, agents, 0.5, seed);
            throw std::invalid_argument("culture must be ic, um10 or um50");
        },
        py::arg("culture"), py::arg("m"), py::arg("n"), py::arg("seed") = 0);
    m.def(
        "generate_urn", &generate_urn, py::arg("m"), py::arg("n"), py::arg("correlation"), py::arg("seed") = 0);
    m.def(
        "kendall_tau", [](const std::vector<double>& x, const std::vector<double>& y) { return kendall_tau(x, y).tau; },
        py::arg("x"), py::arg("y"));
}
