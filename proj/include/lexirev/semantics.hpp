#pragma once

#include "lexirev/formula.hpp"
#include "lexirev/model.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

namespace lexirev {

/// Enumeration budgets. Artifact policy, not part of the theory.
struct Limits {
    /// Largest alphabet the model enumerator accepts. Brute-force equivalence
    /// enumerates model pairs, so it needs twice the alphabet within this.
    std::size_t max_vars = default_enumeration_cap;
    /// Largest prefix for which all 2^k Q-conjunctions are generated.
    std::size_t max_conjunction_formulas = 20;

    /// Defaults, with max_vars overridden by LEXIREV_MAX_VARS when set.
    static Limits from_environment();
};

/// Lexicographic revision sequence [S_1, ..., S_m].
///
/// Index 0 holds S_1, the MOST RECENT revision: it dominates the order, and
/// later entries only break its ties. The alphabet covers every member
/// formula and may hold extra variables.
class RevisionSequence {
public:
    RevisionSequence();
    /// Alphabet inferred from the formulas, in order of first occurrence.
    explicit RevisionSequence(std::vector<Formula> formulas);
    /// Throws AlphabetMismatch if a formula uses a variable outside `alphabet`.
    RevisionSequence(std::vector<Formula> formulas, Alphabet alphabet);
    RevisionSequence(std::vector<Formula> formulas, std::shared_ptr<const Alphabet> alphabet);

    /// Parses each string with parse_formula.
    static RevisionSequence parse(const std::vector<std::string>& formulas);

    std::size_t size() const noexcept { return formulas_.size(); }
    bool empty() const noexcept { return formulas_.empty(); }
    const Formula& operator[](std::size_t index) const { return formulas_[index]; }
    const std::vector<Formula>& formulas() const noexcept { return formulas_; }
    auto begin() const noexcept { return formulas_.begin(); }
    auto end() const noexcept { return formulas_.end(); }

    const Alphabet& alphabet() const noexcept { return *alphabet_; }
    const std::shared_ptr<const Alphabet>& alphabet_ptr() const noexcept { return alphabet_; }

    /// Copy without the formula at 0-based `index`; same alphabet.
    RevisionSequence without(std::size_t index) const;
    /// Same formulas over a wider alphabet.
    RevisionSequence over(const Alphabet& alphabet) const;
    /// Formulas from [first, last); same alphabet.
    RevisionSequence slice(std::size_t first, std::size_t last) const;

    /// Structural equality of formulas and alphabets.
    friend bool operator==(const RevisionSequence& a, const RevisionSequence& b);

private:
    std::vector<Formula> formulas_;
    std::shared_ptr<const Alphabet> alphabet_;
};

/// S . R: the formulas of `front` followed by those of `back`, over the union
/// of their alphabets.
RevisionSequence concat(const RevisionSequence& front, const RevisionSequence& back);

std::ostream& operator<<(std::ostream& os, const RevisionSequence& s);

enum class OrderVerdict { StrictlyLess, Equivalent, StrictlyGreater };

std::ostream& operator<<(std::ostream& os, OrderVerdict v);

/// A pair of models that two orders compare differently: leq(i, j, s) and
/// leq(i, j, r) disagree.
struct Witness {
    Model i;
    Model j;
};

/// Outcome of an equivalence (or redundancy) check.
class EquivalenceResult {
public:
    static EquivalenceResult equivalent() { return EquivalenceResult(std::nullopt); }
    static EquivalenceResult differs(Witness w) { return EquivalenceResult(std::move(w)); }

    bool is_equivalent() const noexcept { return !witness_; }
    explicit operator bool() const noexcept { return is_equivalent(); }
    /// Throws std::logic_error when the orders are equivalent.
    const Witness& witness() const;

private:
    explicit EquivalenceResult(std::optional<Witness> w) : witness_(std::move(w)) {}
    std::optional<Witness> witness_;
};

/// I <=_F J: I satisfies F or J falsifies it.
/// Throws AlphabetMismatch unless i and j share an alphabet.
bool leq_formula(const Model& i, const Model& j, const Formula& f);

/// I <=_S J, by the recursive definition: true for the empty sequence,
/// otherwise I <=_{S_1} J and (J </=_{S_1} I or I <=_{rest} J).
bool leq(const Model& i, const Model& j, const RevisionSequence& s);

OrderVerdict compare(const Model& i, const Model& j, const RevisionSequence& s);

/// Decides S == R by comparing every pair of models over the union of the two
/// alphabets. Returns the first disagreeing pair, with i as the outer loop,
/// both in binary-counting order. Throws CapExceeded when twice the alphabet
/// size exceeds limits.max_vars.
EquivalenceResult equivalent_bruteforce(const RevisionSequence& s, const RevisionSequence& r,
                                        const Limits& limits = {});

/// (B_1 == S_1) & ... & (B_k == S_k) with each B_i a constant, written as the
/// conjunction of S_k (bit set) or !S_k (bit clear). The empty conjunction is
/// true. Throws std::invalid_argument on a length mismatch.
Formula q_conjunction(const RevisionSequence& s, const std::vector<bool>& bits);

/// Decides premise |= conclusion.
using EntailmentOracle = std::function<bool(const Formula& premise, const Formula& conclusion)>;

/// Decides whether the last formula of s is redundant by checking that every
/// Q-conjunction over the preceding formulas entails S_m or !S_m.
/// Throws std::invalid_argument for an empty sequence and CapExceeded when
/// the prefix is longer than limits.max_conjunction_formulas.
bool redundant_last_by_conjunctions(const RevisionSequence& s, const EntailmentOracle& entails,
                                    const Limits& limits = {});

} // namespace lexirev
