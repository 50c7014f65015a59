#pragma once

#include "lexirev/formula.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

namespace lexirev {

struct Literal {
    Var var;
    bool positive = true;

    Literal negated() const { return {var, !positive}; }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal pos(std::string name) { return {Var(std::move(name)), true}; }
inline Literal neg(std::string name) { return {Var(std::move(name)), false}; }

/// Disjunction of literals, kept sorted and duplicate-free. The empty clause
/// is false. A clause may hold both x and !x.
class Clause {
public:
    Clause() = default;
    Clause(std::initializer_list<Literal> literals) : Clause(std::vector<Literal>(literals)) {}
    explicit Clause(std::vector<Literal> literals);

    const std::vector<Literal>& literals() const noexcept { return literals_; }
    std::size_t size() const noexcept { return literals_.size(); }
    bool empty() const noexcept { return literals_.empty(); }
    auto begin() const noexcept { return literals_.begin(); }
    auto end() const noexcept { return literals_.end(); }

    bool contains(const Literal& l) const;
    bool tautological() const;
    std::size_t positive_count() const;

    friend bool operator==(const Clause&, const Clause&) = default;
    friend auto operator<=>(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> literals_;
};

/// Conjunction of clauses. No clauses means true.
struct Cnf {
    std::vector<Clause> clauses;

    Cnf() = default;
    Cnf(std::initializer_list<Clause> cs) : clauses(cs) {}
    explicit Cnf(std::vector<Clause> cs) : clauses(std::move(cs)) {}

    std::size_t size() const noexcept { return clauses.size(); }
    bool empty() const noexcept { return clauses.empty(); }
    auto begin() const noexcept { return clauses.begin(); }
    auto end() const noexcept { return clauses.end(); }

    friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// Variables in order of first occurrence.
std::vector<Var> variables(const Cnf& c);

bool is_horn(const Cnf& c);

/// Definitional (Tseitin) clausification. The result is equisatisfiable with
/// f: restricted to vars(f) each of its models satisfies f, and each model of
/// f extends to one of its models. Definition variables are named "__t_<k>".
Cnf to_cnf(const Formula& f);

inline constexpr std::size_t equivalent_cnf_max_vars = 12;

/// Equivalence-preserving clausification by distribution over negation
/// normal form, with tautologies and duplicates dropped. Throws CapExceeded
/// for formulas over more than equivalent_cnf_max_vars variables.
Cnf to_cnf_equivalent(const Formula& f);

/// Reads f as clauses without transforming it, if it already has CNF shape:
/// a constant, a literal, a disjunction of literals, or a conjunction of
/// those.
std::optional<Cnf> cnf_shape(const Formula& f);

/// Inverse of cnf_shape: {} is true, {{}} is false, and unit clauses and
/// single-clause sets are not wrapped.
Formula cnf_to_formula(const Cnf& c);

std::ostream& operator<<(std::ostream& os, const Literal& l);
std::ostream& operator<<(std::ostream& os, const Clause& c);
std::ostream& operator<<(std::ostream& os, const Cnf& c);

} // namespace lexirev
