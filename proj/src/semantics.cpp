#include "lexirev/semantics.hpp"

#include "lexirev/errors.hpp"
#include "lexirev/parser.hpp"

#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace lexirev {

Limits Limits::from_environment()
{
    Limits limits;
    if (const char* raw = std::getenv("LEXIREV_MAX_VARS"); raw && *raw) {
        try {
            std::size_t used = 0;
            const auto value = std::stoul(raw, &used);
            if (used != std::string(raw).size())
                throw std::invalid_argument(raw);
            limits.max_vars = value;
        } catch (const std::exception&) {
            throw Error(std::string("LEXIREV_MAX_VARS must be a non-negative integer, got '") + raw + "'");
        }
    }
    return limits;
}

namespace {

std::shared_ptr<const Alphabet> infer_alphabet(const std::vector<Formula>& formulas)
{
    std::vector<Var> vars;
    std::unordered_set<Var> seen;
    for (const auto& f : formulas)
        for (const auto& v : variables(f))
            if (seen.insert(v).second)
                vars.push_back(v);
    return std::make_shared<const Alphabet>(std::move(vars));
}

void require_same_alphabet(const Model& i, const Model& j)
{
    if (i.alphabet_ptr() != j.alphabet_ptr() && !(i.alphabet() == j.alphabet()))
        throw AlphabetMismatch("models are over different alphabets");
}

} // namespace

RevisionSequence::RevisionSequence() : alphabet_(std::make_shared<const Alphabet>()) {}

RevisionSequence::RevisionSequence(std::vector<Formula> formulas)
    : formulas_(std::move(formulas)), alphabet_(infer_alphabet(formulas_))
{
}

RevisionSequence::RevisionSequence(std::vector<Formula> formulas, Alphabet alphabet)
    : RevisionSequence(std::move(formulas), std::make_shared<const Alphabet>(std::move(alphabet)))
{
}

RevisionSequence::RevisionSequence(std::vector<Formula> formulas, std::shared_ptr<const Alphabet> alphabet)
    : formulas_(std::move(formulas)), alphabet_(std::move(alphabet))
{
    for (const auto& f : formulas_)
        for (const auto& v : variables(f))
            if (!alphabet_->contains(v))
                throw AlphabetMismatch("variable '" + v.name() + "' is not in the sequence's alphabet");
}

RevisionSequence RevisionSequence::parse(const std::vector<std::string>& formulas)
{
    std::vector<Formula> parsed;
    for (const auto& text : formulas)
        parsed.push_back(parse_formula(text));
    return RevisionSequence(std::move(parsed));
}

RevisionSequence RevisionSequence::without(std::size_t index) const
{
    if (index >= formulas_.size())
        throw std::out_of_range("sequence index out of range");
    auto copy = formulas_;
    copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(index));
    return RevisionSequence(std::move(copy), alphabet_);
}

RevisionSequence RevisionSequence::over(const Alphabet& alphabet) const
{
    return RevisionSequence(formulas_, unite(alphabet, *alphabet_));
}

RevisionSequence RevisionSequence::slice(std::size_t first, std::size_t last) const
{
    if (first > last || last > formulas_.size())
        throw std::out_of_range("sequence slice out of range");
    return RevisionSequence(std::vector<Formula>(formulas_.begin() + static_cast<std::ptrdiff_t>(first),
                                                 formulas_.begin() + static_cast<std::ptrdiff_t>(last)),
                            alphabet_);
}

bool operator==(const RevisionSequence& a, const RevisionSequence& b)
{
    return a.formulas_ == b.formulas_ && a.alphabet() == b.alphabet();
}

RevisionSequence concat(const RevisionSequence& front, const RevisionSequence& back)
{
    auto formulas = front.formulas();
    formulas.insert(formulas.end(), back.begin(), back.end());
    return RevisionSequence(std::move(formulas), unite(front.alphabet(), back.alphabet()));
}

std::ostream& operator<<(std::ostream& os, const RevisionSequence& s)
{
    os << '[';
    for (std::size_t k = 0; k < s.size(); ++k)
        os << (k ? ", " : "") << s[k];
    return os << ']';
}

std::ostream& operator<<(std::ostream& os, OrderVerdict v)
{
    switch (v) {
    case OrderVerdict::StrictlyLess: return os << "strictly-less";
    case OrderVerdict::Equivalent: return os << "equivalent";
    case OrderVerdict::StrictlyGreater: return os << "strictly-greater";
    }
    return os;
}

const Witness& EquivalenceResult::witness() const
{
    if (!witness_)
        throw std::logic_error("equivalent orders have no witness");
    return *witness_;
}

bool leq_formula(const Model& i, const Model& j, const Formula& f)
{
    require_same_alphabet(i, j);
    return eval(f, i) || !eval(f, j);
}

bool leq(const Model& i, const Model& j, const RevisionSequence& s)
{
    require_same_alphabet(i, j);
    // The recursion unrolled: the first formula that separates i and j decides.
    for (const auto& f : s) {
        const bool forward = eval(f, i) || !eval(f, j);
        const bool backward = eval(f, j) || !eval(f, i);
        if (!forward)
            return false;
        if (!backward)
            return true;
    }
    return true;
}

OrderVerdict compare(const Model& i, const Model& j, const RevisionSequence& s)
{
    const bool forward = leq(i, j, s);
    const bool backward = leq(j, i, s);
    if (forward && backward)
        return OrderVerdict::Equivalent;
    return forward ? OrderVerdict::StrictlyLess : OrderVerdict::StrictlyGreater;
}

EquivalenceResult equivalent_bruteforce(const RevisionSequence& s, const RevisionSequence& r, const Limits& limits)
{
    auto alphabet = std::make_shared<const Alphabet>(unite(s.alphabet(), r.alphabet()));
    const std::size_t n = alphabet->size();
    if (2 * n > limits.max_vars)
        throw CapExceeded("brute-force equivalence over " + std::to_string(n) + " variables enumerates 2^" +
                          std::to_string(2 * n) + " model pairs (cap is 2^" + std::to_string(limits.max_vars) +
                          ")");

    const auto models = enumerate_models(alphabet, limits.max_vars);
    std::vector<Model> all(models.begin(), models.end());

    // truth[k][m]: does model m satisfy formula k of the sequence.
    auto tabulate = [&all](const RevisionSequence& seq) {
        std::vector<std::vector<bool>> truth;
        for (const auto& f : seq) {
            std::vector<bool> row;
            row.reserve(all.size());
            for (const auto& m : all)
                row.push_back(eval(f, m));
            truth.push_back(std::move(row));
        }
        return truth;
    };
    const auto ts = tabulate(s);
    const auto tr = tabulate(r);

    auto leq_by_table = [](const std::vector<std::vector<bool>>& truth, std::size_t i, std::size_t j) {
        for (const auto& row : truth) {
            if (row[i] != row[j])
                return row[i];
        }
        return true;
    };

    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            if (leq_by_table(ts, i, j) != leq_by_table(tr, i, j))
                return EquivalenceResult::differs({all[i], all[j]});
    return EquivalenceResult::equivalent();
}

Formula q_conjunction(const RevisionSequence& s, const std::vector<bool>& bits)
{
    if (bits.size() != s.size())
        throw std::invalid_argument("Q-conjunction needs one bit per formula");
    std::vector<Formula> parts;
    for (std::size_t k = 0; k < s.size(); ++k)
        parts.push_back(bits[k] ? s[k] : make_not(s[k]));
    return conjoin(std::move(parts));
}

bool redundant_last_by_conjunctions(const RevisionSequence& s, const EntailmentOracle& entails, const Limits& limits)
{
    if (s.empty())
        throw std::invalid_argument("redundancy of the last formula needs a non-empty sequence");
    const std::size_t k = s.size() - 1;
    if (k > limits.max_conjunction_formulas)
        throw CapExceeded("Q-conjunction enumeration over " + std::to_string(k) + " formulas (cap is " +
                          std::to_string(limits.max_conjunction_formulas) + ")");

    const auto prefix = s.slice(0, k);
    const Formula& last = s[k];
    const Formula not_last = make_not(last);
    std::vector<bool> bits(k);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
        for (std::size_t b = 0; b < k; ++b)
            bits[b] = (code >> b) & 1U;
        const auto q = q_conjunction(prefix, bits);
        if (!entails(q, last) && !entails(q, not_last))
            return false;
    }
    return true;
}

} // namespace lexirev
