#pragma once

#include "lexirev/cnf.hpp"
#include "lexirev/model.hpp"
#include "lexirev/semantics.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace lexirev {

/// Truth values for some variables; at most one value each.
class PartialAssignment {
public:
    PartialAssignment() = default;
    PartialAssignment(std::initializer_list<std::pair<const char*, bool>> values);

    /// False (and no change) if v already holds the opposite value.
    bool assign(const Var& v, bool value);
    std::optional<bool> value(const Var& v) const;
    bool contains(const Var& v) const { return values_.contains(v); }
    std::size_t size() const noexcept { return values_.size(); }
    const std::map<Var, bool>& values() const noexcept { return values_; }

    friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;

private:
    std::map<Var, bool> values_;
};

struct Conflict {};

/// Unit propagation stopped without an empty clause. `reduced` drops every
/// clause satisfied by `assignment` and every literal it falsifies; none of
/// its clauses is a unit.
struct Fixpoint {
    PartialAssignment assignment;
    Cnf reduced;
};

using PropagationResult = std::variant<Conflict, Fixpoint>;

/// Asserts the literals of unit clauses until none remain or a clause
/// becomes empty. Only variables occurring in c are ever assigned.
PropagationResult unit_propagate(const Cnf& c, PartialAssignment p = {});

struct SolveOptions {
    /// Decisions plus conflicts allowed before StepBudgetExceeded.
    std::optional<std::uint64_t> max_steps;
    /// Variables indexed ahead of all others, in this order; the rest follow
    /// in order of first occurrence. Names absent from the CNF are ignored.
    std::vector<Var> branch_first;
};

class SolveResult {
public:
    static SolveResult satisfiable(Model m) { return SolveResult(std::move(m)); }
    static SolveResult unsatisfiable() { return SolveResult(std::nullopt); }

    bool is_satisfiable() const noexcept { return model_.has_value(); }
    explicit operator bool() const noexcept { return is_satisfiable(); }
    /// Throws std::logic_error when unsatisfiable.
    const Model& model() const;

    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;

private:
    explicit SolveResult(std::optional<Model> m) : model_(std::move(m)) {}
    std::optional<Model> model_;
};

/// DPLL with two watched literals and chronological backtracking.
/// Variables are ordered by first occurrence in c; the search branches on
/// the lowest unassigned one, trying false first. A returned model is total
/// over variables(c) and has been checked against every clause.
SolveResult solve(const Cnf& c, const SolveOptions& options = {});

bool satisfiable(const Formula& f, const SolveOptions& options = {});

/// premise |= conclusion, decided as unsatisfiability of premise & !conclusion.
bool entails(const Formula& premise, const Formula& conclusion, const SolveOptions& options = {});

/// Entailment oracle backed by solve().
EntailmentOracle sat_entailment(const SolveOptions& options = {});

} // namespace lexirev
