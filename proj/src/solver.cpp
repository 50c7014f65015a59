#include "lexirev/solver.hpp"

#include "lexirev/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace lexirev {

PartialAssignment::PartialAssignment(std::initializer_list<std::pair<const char*, bool>> values)
{
    for (const auto& [name, value] : values)
        if (!assign(Var(name), value))
            throw std::invalid_argument(std::string("conflicting values for '") + name + "'");
}

bool PartialAssignment::assign(const Var& v, bool value)
{
    auto [it, inserted] = values_.emplace(v, value);
    return inserted || it->second == value;
}

std::optional<bool> PartialAssignment::value(const Var& v) const
{
    auto it = values_.find(v);
    if (it == values_.end())
        return std::nullopt;
    return it->second;
}

PropagationResult unit_propagate(const Cnf& c, PartialAssignment p)
{
    std::vector<Clause> current = c.clauses;
    for (;;) {
        std::vector<Clause> next;
        bool assigned = false;
        for (const auto& clause : current) {
            std::vector<Literal> open;
            bool satisfied = false;
            for (const auto& l : clause) {
                const auto v = p.value(l.var);
                if (!v)
                    open.push_back(l);
                else if (*v == l.positive) {
                    satisfied = true;
                    break;
                }
            }
            if (satisfied)
                continue;
            if (open.empty())
                return Conflict{};
            if (open.size() == 1) {
                // Within one pass an earlier unit may have assigned the
                // opposite value; the next pass then finds the empty clause.
                p.assign(open.front().var, open.front().positive);
                assigned = true;
                continue;
            }
            next.emplace_back(std::move(open));
        }
        current = std::move(next);
        if (!assigned)
            return Fixpoint{std::move(p), Cnf(std::move(current))};
    }
}

const Model& SolveResult::model() const
{
    if (!model_)
        throw std::logic_error("unsatisfiable formula has no model");
    return *model_;
}

namespace {

std::vector<Var> branching_order(const Cnf& c, const std::vector<Var>& first)
{
    const auto occurring = variables(c);
    if (first.empty())
        return occurring;
    const std::unordered_set<Var> present(occurring.begin(), occurring.end());
    std::unordered_set<Var> placed;
    std::vector<Var> out;
    for (const auto& v : first)
        if (present.count(v) && placed.insert(v).second)
            out.push_back(v);
    for (const auto& v : occurring)
        if (!placed.count(v))
            out.push_back(v);
    return out;
}

// Literal code 2v for v, 2v+1 for !v.
using Lit = std::uint32_t;

constexpr Lit negate(Lit l) { return l ^ 1U; }
constexpr std::uint32_t var_of(Lit l) { return l >> 1; }

class Dpll {
public:
    Dpll(const Cnf& c, const SolveOptions& options) : options_(options)
    {
        auto vars = branching_order(c, options.branch_first);
        std::unordered_map<Var, std::uint32_t> index;
        for (std::uint32_t k = 0; k < vars.size(); ++k)
            index.emplace(vars[k], k);
        alphabet_ = std::make_shared<const Alphabet>(std::move(vars));
        value_.assign(alphabet_->size(), Unassigned);
        watches_.resize(2 * alphabet_->size());

        for (const auto& clause : c) {
            if (clause.tautological())
                continue;
            std::vector<Lit> lits;
            for (const auto& l : clause)
                lits.push_back(2 * index.at(l.var) + (l.positive ? 0U : 1U));
            if (lits.empty())
                trivially_unsat_ = true;
            else if (lits.size() == 1)
                units_.push_back(lits.front());
            else {
                watches_[lits[0]].push_back(clauses_.size());
                watches_[lits[1]].push_back(clauses_.size());
                clauses_.push_back(std::move(lits));
            }
        }
    }

    SolveResult run()
    {
        auto unsat = [this] {
            auto r = SolveResult::unsatisfiable();
            r.decisions = decisions_;
            r.conflicts = conflicts_;
            return r;
        };
        if (trivially_unsat_)
            return unsat();
        for (Lit u : units_) {
            if (is_false(u))
                return unsat();
            if (!is_true(u))
                enqueue(u);
        }

        for (;;) {
            if (!propagate()) {
                ++conflicts_;
                charge();
                if (!backtrack())
                    return unsat();
                continue;
            }
            const auto next = first_unassigned();
            if (!next)
                break;
            ++decisions_;
            charge();
            levels_.push_back({trail_.size(), false});
            enqueue(2 * *next + 1);
        }

        std::vector<bool> values(value_.size());
        for (std::size_t v = 0; v < value_.size(); ++v)
            values[v] = value_[v] == True;
        Model m(alphabet_, std::move(values));
        auto r = SolveResult::satisfiable(std::move(m));
        r.decisions = decisions_;
        r.conflicts = conflicts_;
        return r;
    }

private:
    enum : std::int8_t { False = 0, True = 1, Unassigned = 2 };

    struct Level {
        std::size_t trail_start;
        bool flipped;
    };

    bool is_true(Lit l) const { return value_[var_of(l)] == ((l & 1U) ? False : True); }
    bool is_false(Lit l) const { return value_[var_of(l)] == ((l & 1U) ? True : False); }

    void enqueue(Lit l)
    {
        value_[var_of(l)] = (l & 1U) ? False : True;
        trail_.push_back(l);
    }

    void charge()
    {
        if (options_.max_steps && decisions_ + conflicts_ > *options_.max_steps)
            throw StepBudgetExceeded("solver exceeded its budget of " + std::to_string(*options_.max_steps) +
                                     " steps");
    }

    // Each clause watches its first two literals; a watched literal is false
    // only while the other one is true or the clause awaits propagation.
    bool propagate()
    {
        while (head_ < trail_.size()) {
            const Lit falsified = negate(trail_[head_++]);
            auto& list = watches_[falsified];
            std::size_t keep = 0;
            bool conflict = false;
            for (std::size_t w = 0; w < list.size(); ++w) {
                const std::size_t ci = list[w];
                if (conflict) {
                    list[keep++] = ci;
                    continue;
                }
                auto& lits = clauses_[ci];
                if (lits[0] == falsified)
                    std::swap(lits[0], lits[1]);
                if (is_true(lits[0])) {
                    list[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < lits.size(); ++k) {
                    if (!is_false(lits[k])) {
                        std::swap(lits[1], lits[k]);
                        watches_[lits[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved)
                    continue;
                list[keep++] = ci;
                if (is_false(lits[0]))
                    conflict = true;
                else
                    enqueue(lits[0]);
            }
            list.resize(keep);
            if (conflict)
                return false;
        }
        return true;
    }

    // Undoes the newest level whose decision has not been flipped and asserts
    // the flipped decision in its place. False when the search space is spent.
    bool backtrack()
    {
        while (!levels_.empty()) {
            Level& top = levels_.back();
            const Lit decision = trail_[top.trail_start];
            for (std::size_t k = top.trail_start; k < trail_.size(); ++k) {
                value_[var_of(trail_[k])] = Unassigned;
                cursor_ = std::min<std::size_t>(cursor_, var_of(trail_[k]));
            }
            trail_.resize(top.trail_start);
            head_ = trail_.size();
            if (!top.flipped) {
                top.flipped = true;
                enqueue(negate(decision));
                return true;
            }
            levels_.pop_back();
        }
        return false;
    }

    std::optional<std::uint32_t> first_unassigned()
    {
        // Every variable below the cursor is assigned; backtracking lowers it.
        while (cursor_ < value_.size() && value_[cursor_] != Unassigned)
            ++cursor_;
        if (cursor_ == value_.size())
            return std::nullopt;
        return static_cast<std::uint32_t>(cursor_);
    }

    const SolveOptions& options_;
    std::shared_ptr<const Alphabet> alphabet_;
    std::vector<std::vector<Lit>> clauses_;
    std::vector<std::vector<std::size_t>> watches_;
    std::vector<Lit> units_;
    std::vector<std::int8_t> value_;
    std::vector<Lit> trail_;
    std::vector<Level> levels_;
    std::size_t head_ = 0;
    std::size_t cursor_ = 0;
    std::uint64_t decisions_ = 0;
    std::uint64_t conflicts_ = 0;
    bool trivially_unsat_ = false;
};

} // namespace

SolveResult solve(const Cnf& c, const SolveOptions& options)
{
    auto result = Dpll(c, options).run();
    if (result.is_satisfiable()) {
        const auto& m = result.model();
        for (const auto& clause : c) {
            bool ok = false;
            for (const auto& l : clause)
                if (m.value(l.var) == l.positive) {
                    ok = true;
                    break;
                }
            if (!ok)
                throw std::logic_error("solver produced a model violating a clause");
        }
    }
    return result;
}

bool satisfiable(const Formula& f, const SolveOptions& options) { return solve(to_cnf(f), options).is_satisfiable(); }

bool entails(const Formula& premise, const Formula& conclusion, const SolveOptions& options)
{
    return !satisfiable(make_and({premise, make_not(conclusion)}), options);
}

EntailmentOracle sat_entailment(const SolveOptions& options)
{
    return [options](const Formula& premise, const Formula& conclusion) {
        return entails(premise, conclusion, options);
    };
}

} // namespace lexirev
