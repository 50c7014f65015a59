#include "lexirev/redundancy.hpp"

#include "lexirev/encoder.hpp"
#include "lexirev/horn.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lexirev {

std::ostream& operator<<(std::ostream& os, Engine e)
{
    switch (e) {
    case Engine::Sat: return os << "sat";
    case Engine::Bruteforce: return os << "brute";
    case Engine::Auto: return os << "auto";
    }
    return os;
}

Engine parse_engine(std::string_view name)
{
    if (name == "sat")
        return Engine::Sat;
    if (name == "brute" || name == "bruteforce")
        return Engine::Bruteforce;
    if (name == "auto")
        return Engine::Auto;
    throw std::invalid_argument("unknown engine '" + std::string(name) + "' (expected sat, brute or auto)");
}

Engine resolve_engine(const RevisionSequence& s, const RevisionSequence& r, const CheckOptions& options)
{
    if (options.engine != Engine::Auto)
        return options.engine;
    const std::size_t n = unite(s.alphabet(), r.alphabet()).size();
    if (2 * n > options.limits.max_vars)
        return Engine::Sat;
    auto total = [](const RevisionSequence& q) {
        return std::accumulate(q.begin(), q.end(), std::size_t{0},
                               [](std::size_t acc, const Formula& f) { return acc + size(f); });
    };
    const double cost = std::ldexp(static_cast<double>(total(s) + total(r)), static_cast<int>(2 * n));
    return cost <= auto_bruteforce_budget ? Engine::Bruteforce : Engine::Sat;
}

EquivalenceResult equivalent(const RevisionSequence& s, const RevisionSequence& r, const CheckOptions& options)
{
    if (resolve_engine(s, r, options) == Engine::Bruteforce)
        return equivalent_bruteforce(s, r, options.limits);
    return check_equivalence(s, r, options.solve);
}

EquivalenceResult is_redundant_at(const RevisionSequence& s, std::size_t k, const CheckOptions& options)
{
    if (k < 1 || k > s.size())
        throw std::out_of_range("position " + std::to_string(k) + " is outside 1.." + std::to_string(s.size()));
    return equivalent(s, s.without(k - 1), options);
}

MinimizationReport minimize(const RevisionSequence& s, const CheckOptions& options)
{
    MinimizationReport report{s, s, {}, 0};
    std::vector<std::size_t> origin(s.size());
    std::iota(origin.begin(), origin.end(), std::size_t{1});

    for (bool removed = true; removed;) {
        removed = false;
        // Removing position k leaves positions below k where they were.
        for (std::size_t k = report.minimized.size(); k >= 1; --k) {
            ++report.checks_performed;
            if (!is_redundant_at(report.minimized, k, options).is_equivalent())
                continue;
            report.minimized = report.minimized.without(k - 1);
            report.removed_positions.push_back(origin[k - 1]);
            origin.erase(origin.begin() + static_cast<std::ptrdiff_t>(k - 1));
            removed = true;
        }
    }
    return report;
}

bool horn_pair(const Formula& f1, const Formula& f2)
{
    auto c1 = cnf_shape(f1);
    auto c2 = cnf_shape(f2);
    return c1 && c2 && is_horn(*c1) && is_horn(*c2);
}

bool check_redundant_two(const Formula& f1, const Formula& f2, const SolveOptions& options)
{
    if (horn_pair(f1, f2))
        return redundant_two_horn(HornFormula::from(f1), HornFormula::from(f2));
    const auto not_f1 = make_not(f1);
    const auto not_f2 = make_not(f2);
    auto equiv = [&](const Formula& a, const Formula& b) {
        return entails(a, b, options) && entails(b, a, options);
    };
    return !satisfiable(f2, options) || !satisfiable(not_f2, options) || equiv(f2, f1) || equiv(f2, not_f1);
}

} // namespace lexirev
