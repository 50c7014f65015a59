#pragma once

#include "lexirev/semantics.hpp"
#include "lexirev/solver.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace lexirev {

/// Variable families of the difference formula. X keeps its own names; every
/// other family uses a reserved "__" prefix:
///   Y = "__y_<x>", Z = "__z_<x>", m_i = "__m_<i>", e_i = "__e_<i>",
///   n_i = "__n_<i>", f_i = "__f_<i>", a = "__a", b = "__b"  (i from 1).
class EncodingContext {
public:
    /// Throws std::invalid_argument if a variable of x already carries one of
    /// the fresh names.
    EncodingContext(Alphabet x, std::size_t s_length, std::size_t r_length);

    const Alphabet& x() const noexcept { return x_; }
    const std::vector<Var>& y() const noexcept { return y_; }
    const std::vector<Var>& z() const noexcept { return z_; }
    const std::vector<Var>& m() const noexcept { return m_; }
    const std::vector<Var>& e() const noexcept { return e_; }
    const std::vector<Var>& n() const noexcept { return n_; }
    const std::vector<Var>& f() const noexcept { return f_; }
    const Var& a() const noexcept { return a_; }
    const Var& b() const noexcept { return b_; }

    /// S_i[Y/X] and S_i[Z/X]. Throw AlphabetMismatch for variables outside X.
    Formula to_y(const Formula& g) const;
    Formula to_z(const Formula& g) const;

private:
    Formula substitute(const Formula& g, const std::vector<Var>& image) const;

    Alphabet x_;
    std::vector<Var> y_, z_, m_, e_, n_, f_;
    Var a_, b_;
};

/// S_i[Y/X] & !S_i[Z/X]: the Y-model is strictly below the Z-model under S_i.
Formula strict_formula(const Formula& s_i, const EncodingContext& ctx);

/// S_i[Y/X] <-> S_i[Z/X]: the two models are tied under S_i.
Formula equiv_formula(const Formula& s_i, const EncodingContext& ctx);

/// m_1 | (e_1 & (m_2 | (e_2 & ... (m_k | e_k)))); true for empty lists.
/// Throws std::invalid_argument when the lists differ in length.
Formula order_formula(const std::vector<Var>& m, const std::vector<Var>& e);

struct DiffEncoding {
    Formula formula;
    EncodingContext context;
    /// Common length after padding.
    std::size_t length;
};

/// The shorter sequence is padded with copies of its own last formula (true
/// if it is empty). The conjuncts are, in order: m_i <-> STRICT(S_i),
/// e_i <-> EQUIV(S_i), a <-> ORDER(M,E), then the same for R with n, f and b,
/// and finally !(a <-> b). X is the union of the two alphabets.
DiffEncoding build_diff(const RevisionSequence& s, const RevisionSequence& r);

/// Satisfiable iff S and R differ. A model decodes to a witness by reading Y
/// as i and Z as j over X; Y or Z variables absent from the clauses read as
/// false. The witness is replayed through leq before it is returned.
/// Unless options.branch_first is set, the solver branches on Y and Z copies
/// first: variables mentioned by more formulas earlier, Y copy before Z copy.
EquivalenceResult check_equivalence(const RevisionSequence& s, const RevisionSequence& r,
                                    const SolveOptions& options = {});

/// check_equivalence(s, s without its last formula).
/// Throws std::invalid_argument for an empty sequence.
EquivalenceResult check_redundant_last(const RevisionSequence& s, const SolveOptions& options = {});

/// DIMACS for the clausified difference formula, with one name comment per
/// variable so every index can be traced back to its role.
std::string diff_dimacs(const RevisionSequence& s, const RevisionSequence& r);

} // namespace lexirev
