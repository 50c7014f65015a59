#pragma once

#include "lexirev/semantics.hpp"
#include "lexirev/solver.hpp"

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace lexirev {

enum class Engine { Sat, Bruteforce, Auto };

std::ostream& operator<<(std::ostream& os, Engine e);
/// "sat", "brute" (or "bruteforce"), "auto". Throws std::invalid_argument.
Engine parse_engine(std::string_view name);

/// Brute force is chosen when 2^(2n) times the total formula size stays
/// within this bound and the pair enumeration fits the cap.
inline constexpr double auto_bruteforce_budget = 1e7;

struct CheckOptions {
    Engine engine = Engine::Sat;
    Limits limits;
    SolveOptions solve;
};

/// The engine that `options.engine` stands for on this pair: Sat or Bruteforce.
Engine resolve_engine(const RevisionSequence& s, const RevisionSequence& r, const CheckOptions& options = {});

EquivalenceResult equivalent(const RevisionSequence& s, const RevisionSequence& r, const CheckOptions& options = {});

/// Whether s equals s without its k-th formula (1-based, 1 = most recent).
/// Throws std::out_of_range unless 1 <= k <= |s|.
EquivalenceResult is_redundant_at(const RevisionSequence& s, std::size_t k, const CheckOptions& options = {});

struct MinimizationReport {
    RevisionSequence original;
    RevisionSequence minimized;
    /// 1-based positions in `original`, in the order they were removed.
    std::vector<std::size_t> removed_positions;
    std::size_t checks_performed = 0;
};

/// Greedy removal, oldest revision first: each pass tries positions |s|..1
/// of the current sequence and drops every one whose removal keeps the order;
/// passes repeat until one removes nothing. Not guaranteed shortest.
MinimizationReport minimize(const RevisionSequence& s, const CheckOptions& options = {});

/// True when both formulas are Horn clause sets, so the polynomial path applies.
bool horn_pair(const Formula& f1, const Formula& f2);

/// [f1, f2] == [f1]: f2 inconsistent, valid, equivalent to f1, or to !f1.
/// Horn pairs go through redundant_two_horn, the rest through the solver.
bool check_redundant_two(const Formula& f1, const Formula& f2, const SolveOptions& options = {});

} // namespace lexirev
