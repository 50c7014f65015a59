#include "lexirev/horn.hpp"

#include "lexirev/errors.hpp"
#include "lexirev/solver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lexirev {

HornFormula::HornFormula(Cnf cnf) : cnf_(std::move(cnf))
{
    for (const auto& clause : cnf_)
        if (clause.positive_count() > 1) {
            std::ostringstream os;
            os << "clause " << clause << " has more than one positive literal";
            throw NotHorn(os.str());
        }
}

HornFormula HornFormula::from(const Formula& f)
{
    auto shape = cnf_shape(f);
    if (!shape)
        throw NotHorn("formula '" + to_string(f) + "' is not in clausal form");
    return HornFormula(std::move(*shape));
}

namespace {

// Forward chaining over clauses (body -> head), with extra facts asserted
// true and extra variables required false. Each clause fires once its body
// counter reaches zero, so the whole run is linear in the input size.
HornClosure chain(const Cnf& f, const std::vector<Var>& facts, const std::vector<Var>& denied)
{
    std::unordered_map<Var, std::vector<std::size_t>> watchers;
    std::vector<std::size_t> missing(f.size());
    std::vector<std::optional<Var>> head(f.size());
    std::vector<Var> queue;

    HornClosure out;
    auto derive = [&](const Var& v) {
        if (out.derived.insert(v).second)
            queue.push_back(v);
    };

    for (std::size_t k = 0; k < f.size(); ++k) {
        const auto& clause = f.clauses[k];
        for (const auto& l : clause) {
            if (l.positive)
                head[k] = l.var;
            else {
                watchers[l.var].push_back(k);
                ++missing[k];
            }
        }
        if (missing[k] == 0) {
            if (!head[k]) {
                out.consistent = false;
                return out;
            }
            derive(*head[k]);
        }
    }
    for (const auto& v : facts)
        derive(v);

    while (!queue.empty()) {
        const Var v = queue.back();
        queue.pop_back();
        auto it = watchers.find(v);
        if (it == watchers.end())
            continue;
        for (std::size_t k : it->second) {
            if (--missing[k] != 0)
                continue;
            if (!head[k]) {
                out.consistent = false;
                return out;
            }
            derive(*head[k]);
        }
    }
    for (const auto& v : denied)
        if (out.derived.contains(v)) {
            out.consistent = false;
            return out;
        }
    return out;
}

} // namespace

HornClosure horn_closure(const HornFormula& f) { return chain(f.cnf(), {}, {}); }

bool horn_sat(const HornFormula& f) { return horn_closure(f).consistent; }

bool horn_entails_clause(const HornFormula& f, const Clause& c)
{
    // f & !c: each positive literal of c becomes a denied variable, each
    // negative one a fact.
    std::vector<Var> facts, denied;
    for (const auto& l : c)
        (l.positive ? denied : facts).push_back(l.var);
    return !chain(f.cnf(), facts, denied).consistent;
}

bool horn_entails(const HornFormula& premise, const HornFormula& conclusion)
{
    const auto closure = horn_closure(premise);
    if (!closure.consistent)
        return true;
    return std::all_of(conclusion.cnf().begin(), conclusion.cnf().end(),
                       [&](const Clause& c) { return horn_entails_clause(premise, c); });
}

bool horn_equiv(const HornFormula& f1, const HornFormula& f2)
{
    return horn_entails(f1, f2) && horn_entails(f2, f1);
}

Cnf percent_remove(const Cnf& f, const Var& x)
{
    const Literal px{x, true};
    const Literal nx{x, false};
    std::vector<Clause> out;
    for (const auto& clause : f) {
        if (clause.contains(px))
            continue;
        if (!clause.contains(nx)) {
            out.push_back(clause);
            continue;
        }
        std::vector<Literal> rest;
        for (const auto& l : clause)
            if (l != nx)
                rest.push_back(l);
        out.emplace_back(std::move(rest));
    }
    return Cnf(std::move(out));
}

bool entails_var(const Cnf& f, const Var& x) { return horn_entails_clause(HornFormula(f), Clause{{x, true}}); }

bool entailed_by_negvar(const Cnf& f, const Var& x)
{
    const Literal nx{x, false};
    return std::all_of(f.begin(), f.end(), [&](const Clause& c) { return c.contains(nx) || c.tautological(); });
}

bool horn_tautological(const Cnf& f)
{
    return std::all_of(f.begin(), f.end(), [](const Clause& c) { return c.tautological(); });
}

namespace {

// The four rules of the simplification loop, in order. Each checks its
// trigger and side condition on (f1, f2) for the variable x.
enum class Step { NoRule, Fired, Refuted };

class Simplifier {
public:
    Simplifier(Cnf f1, Cnf f2) : f1_(std::move(f1)), f2_(std::move(f2)) { refresh(); }

    bool run()
    {
        // Every firing removes x from both formulas, so the scan restarts at
        // most once per variable.
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& x : occurring()) {
                const Step s = step(x);
                if (s == Step::Refuted)
                    return false;
                if (s == Step::Fired) {
                    f1_ = percent_remove(f1_, x);
                    f2_ = percent_remove(f2_, x);
                    refresh();
                    changed = true;
                    break;
                }
            }
        }
        if (f1_.empty())
            return !c2_.consistent;
        if (!c1_.consistent)
            return horn_tautological(f2_);
        if (f2_.empty())
            return !c1_.consistent;
        if (!c2_.consistent)
            return horn_tautological(f1_);
        return false;
    }

private:
    static bool entails(const HornClosure& c, const Var& x) { return !c.consistent || c.derived.contains(x); }

    Step step(const Var& x) const
    {
        auto rule = [](bool trigger, bool condition) {
            if (!trigger)
                return Step::NoRule;
            return condition ? Step::Fired : Step::Refuted;
        };
        for (Step s : {rule(entails(c2_, x), entailed_by_negvar(f1_, x)),
                       rule(entailed_by_negvar(f2_, x), entails(c1_, x)),
                       rule(entails(c1_, x), entailed_by_negvar(f2_, x)),
                       rule(entailed_by_negvar(f1_, x), entails(c2_, x))})
            if (s != Step::NoRule)
                return s;
        return Step::NoRule;
    }

    std::set<Var> occurring() const
    {
        std::set<Var> vars;
        for (const auto* f : {&f1_, &f2_})
            for (const auto& v : variables(*f))
                vars.insert(v);
        return vars;
    }

    void refresh()
    {
        c1_ = chain(f1_, {}, {});
        c2_ = chain(f2_, {}, {});
    }

    Cnf f1_, f2_;
    HornClosure c1_, c2_;
};

} // namespace

bool horn_neg_equiv(const HornFormula& f1, const HornFormula& f2) { return Simplifier(f1.cnf(), f2.cnf()).run(); }

bool redundant_two_horn(const HornFormula& s1, const HornFormula& s2)
{
    return !horn_sat(s2) || horn_tautological(s2.cnf()) || horn_equiv(s1, s2) || horn_neg_equiv(s2, s1);
}

Var primed(const Var& x) { return Var(x.name() + primed_suffix); }

Cnf negativize(const Cnf& f)
{
    const auto vars = variables(f);
    std::set<Var> present(vars.begin(), vars.end());
    for (const auto& v : vars)
        if (present.contains(primed(v)))
            throw std::invalid_argument("variable '" + primed(v).name() + "' would collide with a primed copy");

    std::vector<Clause> out;
    for (const auto& clause : f) {
        std::vector<Literal> lits;
        for (const auto& l : clause)
            lits.push_back(l.positive ? Literal{primed(l.var), false} : l);
        out.emplace_back(std::move(lits));
    }
    for (const auto& v : vars)
        out.push_back(Clause{{v, false}, {primed(v), false}});
    return Cnf(std::move(out));
}

HardnessInstance build_hardness_instance(const Cnf& f)
{
    const Var y(hardness_selector);
    for (const auto& v : variables(f))
        if (v == y)
            throw std::invalid_argument(std::string("source formula already uses the selector '") +
                                        hardness_selector + "'");
    const Cnf fn = negativize(f);

    std::vector<Clause> first;
    for (const auto& clause : fn) {
        std::vector<Literal> lits = clause.literals();
        lits.push_back({y, false});
        first.emplace_back(std::move(lits));
    }
    std::vector<Formula> seq{cnf_to_formula(Cnf(std::move(first)))};
    for (const auto& x : variables(f))
        seq.push_back(cnf_to_formula(Cnf{Clause{{y, true}}, Clause{{x, false}}, Clause{{primed(x), false}}}));
    seq.push_back(Formula::variable(y));
    return HardnessInstance{RevisionSequence(std::move(seq)), f};
}

EntailmentOracle horn_entailment()
{
    return [](const Formula& premise, const Formula& conclusion) {
        auto p = cnf_shape(premise);
        auto c = cnf_shape(conclusion);
        if (p && c && is_horn(*p) && is_horn(*c))
            return horn_entails(HornFormula(std::move(*p)), HornFormula(std::move(*c)));
        return entails(premise, conclusion);
    };
}

} // namespace lexirev
