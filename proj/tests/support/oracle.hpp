#pragma once

// Test-side reference implementations. Nothing here calls the library's
// evaluator, order or solver: assignments are bitmasks (bit k holds vars[k])
// and formulas are walked directly.

#include "lexirev/cnf.hpp"
#include "lexirev/formula.hpp"
#include "lexirev/model.hpp"
#include "lexirev/semantics.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using lexirev::Clause;
using lexirev::Cnf;
using lexirev::Formula;
using lexirev::Literal;
using lexirev::Model;
using lexirev::RevisionSequence;
using lexirev::Var;

using Bits = std::uint32_t;

bool eval_bits(const Formula& f, const std::vector<Var>& vars, Bits bits);
bool eval_bits(const Cnf& c, const std::vector<Var>& vars, Bits bits);

/// Entry m is the value of f under assignment m; 2^|vars| entries.
std::vector<bool> truth_table(const Formula& f, const std::vector<Var>& vars);

/// Sorted union of variables.
std::vector<Var> union_vars(const std::vector<Formula>& fs);
std::vector<Var> union_vars(const Cnf& c);

bool satisfiable(const Formula& f);
bool satisfiable(const Cnf& c);
bool entails(const Formula& premise, const Formula& conclusion);
bool equivalent(const Formula& f, const Formula& g);

/// Truth tables of each formula of a sequence, over a fixed variable list.
struct SequenceTable {
    std::vector<std::vector<bool>> rows;

    SequenceTable(const std::vector<Formula>& seq, const std::vector<Var>& vars);
    /// I <= J under the lexicographic order: the first formula that tells the
    /// two apart decides.
    bool leq(Bits i, Bits j) const;
    bool tied(Bits i, Bits j) const { return leq(i, j) && leq(j, i); }
};

/// First (i, j) in i-major order on which the two orders disagree.
std::optional<std::pair<Bits, Bits>> first_difference(const std::vector<Formula>& s, const std::vector<Formula>& r,
                                                      const std::vector<Var>& vars);
bool sequences_equivalent(const std::vector<Formula>& s, const std::vector<Formula>& r);
/// The last formula of s can be dropped.
bool redundant_last(const std::vector<Formula>& s);

/// A model over `vars` (in that order) from a bitmask.
Model model_of(const std::vector<Var>& vars, Bits bits);
/// Bitmask of a model's values, read through `vars`.
Bits bits_of(const Model& m, const std::vector<Var>& vars);

std::vector<Var> make_vars(std::size_t n, const char* prefix = "v");

/// All sequences of length 0..max_len over the pool, shortest first.
std::vector<std::vector<Formula>> all_sequences(const std::vector<Formula>& pool, std::size_t max_len);

/// Formulas parsed from text.
std::vector<Formula> parse_all(const std::vector<const char*>& texts);

/// Seeded generators for randomized suites.
class Generator {
public:
    explicit Generator(std::uint32_t seed) : rng_(seed) {}

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    std::size_t between(std::size_t lo, std::size_t hi)
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    bool coin() { return below(2) == 1; }

    Formula formula(const std::vector<Var>& vars, std::size_t depth);
    std::vector<Formula> sequence(const std::vector<Var>& vars, std::size_t max_len, std::size_t depth);
    /// Clauses of `width` literals over distinct variables (width capped by n).
    Cnf cnf(const std::vector<Var>& vars, std::size_t clauses, std::size_t width);
    /// Horn clauses of 1..max_width literals, at most one positive.
    Cnf horn(const std::vector<Var>& vars, std::size_t clauses, std::size_t max_width);

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace oracle
