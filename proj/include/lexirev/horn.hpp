#pragma once

#include "lexirev/cnf.hpp"
#include "lexirev/semantics.hpp"

#include <set>

namespace lexirev {

/// Clause set in which no clause has two positive literals.
class HornFormula {
public:
    /// Throws NotHorn.
    explicit HornFormula(Cnf cnf);
    /// Reads f through cnf_shape. Throws NotHorn if f is not a Horn clause set.
    static HornFormula from(const Formula& f);

    const Cnf& cnf() const noexcept { return cnf_; }

private:
    Cnf cnf_;
};

/// Result of forward chaining. `derived` is the minimal model's set of true
/// variables; it is meaningful only when consistent.
struct HornClosure {
    bool consistent = true;
    std::set<Var> derived;
};

/// Linear-time forward chaining over a Horn clause set.
HornClosure horn_closure(const HornFormula& f);

bool horn_sat(const HornFormula& f);

/// f |= c, decided as inconsistency of f plus the negated literals of c.
bool horn_entails_clause(const HornFormula& f, const Clause& c);

/// Every clause of `conclusion` is entailed by `premise`.
bool horn_entails(const HornFormula& premise, const HornFormula& conclusion);

bool horn_equiv(const HornFormula& f1, const HornFormula& f2);

/// F%x: clauses containing x dropped, !x deleted from the others.
Cnf percent_remove(const Cnf& f, const Var& x);

/// f |= x. Throws NotHorn.
bool entails_var(const Cnf& f, const Var& x);

/// !x |= f: every clause contains !x or is tautological.
bool entailed_by_negvar(const Cnf& f, const Var& x);

/// Every clause holds a complementary pair. True for the empty set.
bool horn_tautological(const Cnf& f);

/// f1 == !f2 by the simplification loop: while some rule fires on a variable
/// x, remove x from both formulas, or answer false when the rule's side
/// condition fails. The rules, tried in order for each variable (by name):
///   f2 |= x  needs !x |= f1;   !x |= f2  needs f1 |= x;
///   f1 |= x  needs !x |= f2;   !x |= f1  needs f2 |= x.
/// At the fixpoint: f1 empty -> f2 inconsistent; f1 inconsistent -> f2 valid;
/// f2 empty -> f1 inconsistent; f2 inconsistent -> f1 valid; else false.
bool horn_neg_equiv(const HornFormula& f1, const HornFormula& f2);

/// [s1, s2] == [s1]: s2 inconsistent, valid, equivalent to s1, or to !s1.
bool redundant_two_horn(const HornFormula& s1, const HornFormula& s2);

/// Suffix naming the primed copy x' of a variable x.
inline constexpr const char* primed_suffix = "__p";
/// Name of the selector variable y in hardness instances.
inline constexpr const char* hardness_selector = "y__sel";

Var primed(const Var& x);

/// F^n: each positive x becomes !x', and {!x, !x'} is added for every
/// variable of f (first-occurrence order). Throws std::invalid_argument if
/// some x' already occurs in f.
Cnf negativize(const Cnf& f);

struct HardnessInstance {
    RevisionSequence sequence;
    Cnf source;
};

/// [!y | F^n, y & !x_1 & !x_1', ..., y & !x_n & !x_n', y], with !y | F^n
/// distributed over the clauses of F^n. Its last formula is redundant iff f
/// is unsatisfiable. Throws std::invalid_argument if y or a primed name
/// already occurs in f.
HardnessInstance build_hardness_instance(const Cnf& f);

/// Horn entailment when both sides are Horn clause sets, the solver otherwise.
EntailmentOracle horn_entailment();

} // namespace lexirev
