#include "lexirev/cnf.hpp"

#include "lexirev/errors.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <unordered_set>

namespace lexirev {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals))
{
    std::sort(literals_.begin(), literals_.end());
    literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

bool Clause::contains(const Literal& l) const { return std::binary_search(literals_.begin(), literals_.end(), l); }

bool Clause::tautological() const
{
    // Sorted by (var, sign): complementary literals are adjacent.
    for (std::size_t i = 1; i < literals_.size(); ++i)
        if (literals_[i].var == literals_[i - 1].var)
            return true;
    return false;
}

std::size_t Clause::positive_count() const
{
    return static_cast<std::size_t>(
        std::count_if(literals_.begin(), literals_.end(), [](const Literal& l) { return l.positive; }));
}

std::vector<Var> variables(const Cnf& c)
{
    std::vector<Var> out;
    std::unordered_set<Var> seen;
    for (const auto& clause : c)
        for (const auto& l : clause)
            if (seen.insert(l.var).second)
                out.push_back(l.var);
    return out;
}

bool is_horn(const Cnf& c)
{
    return std::all_of(c.begin(), c.end(), [](const Clause& cl) { return cl.positive_count() <= 1; });
}

namespace {

class Tseitin {
public:
    explicit Tseitin(const Formula& f)
    {
        for (const auto& v : variables(f))
            taken_.insert(v.name());
    }

    void add_top(const Formula& g)
    {
        switch (g.kind()) {
        case Kind::Constant:
            if (!g.constant_value())
                out_.emplace_back();
            return;
        case Kind::And:
            for (const auto& c : g.children())
                add_top(c);
            return;
        case Kind::Or: {
            std::vector<Literal> lits;
            for (const auto& c : g.children())
                lits.push_back(literal_for(c));
            out_.emplace_back(std::move(lits));
            return;
        }
        case Kind::Implies:
            out_.emplace_back(std::vector<Literal>{literal_for(g.child(0)).negated(), literal_for(g.child(1))});
            return;
        default:
            out_.emplace_back(std::vector<Literal>{literal_for(g)});
            return;
        }
    }

    Cnf take() { return Cnf(std::move(out_)); }

private:
    Var fresh()
    {
        for (;;) {
            std::string name = "__t_" + std::to_string(++counter_);
            if (!taken_.contains(name))
                return Var(std::move(name));
        }
    }

    void clause(std::vector<Literal> lits) { out_.emplace_back(std::move(lits)); }

    Literal literal_for(const Formula& g)
    {
        switch (g.kind()) {
        case Kind::Variable: return {g.var(), true};
        case Kind::Not: return literal_for(g.child(0)).negated();
        case Kind::Constant:
            // Only reachable if the caller skipped constant simplification.
            throw std::logic_error("constant below the root in clausification");
        default: break;
        }

        std::vector<Literal> kids;
        for (const auto& c : g.children())
            kids.push_back(literal_for(c));
        std::pair<Kind, std::vector<Literal>> key{g.kind(), kids};
        if (auto hit = gates_.find(key); hit != gates_.end())
            return hit->second;
        const Literal d{fresh(), true};
        gates_.emplace(std::move(key), d);
        const Literal nd = d.negated();

        switch (g.kind()) {
        case Kind::And: {
            std::vector<Literal> back{d};
            for (const auto& l : kids) {
                clause({nd, l});
                back.push_back(l.negated());
            }
            clause(std::move(back));
            break;
        }
        case Kind::Or: {
            std::vector<Literal> forth{nd};
            for (const auto& l : kids) {
                clause({d, l.negated()});
                forth.push_back(l);
            }
            clause(std::move(forth));
            break;
        }
        case Kind::Implies: {
            const Literal a = kids[0], b = kids[1];
            clause({nd, a.negated(), b});
            clause({d, a});
            clause({d, b.negated()});
            break;
        }
        case Kind::Iff: {
            const Literal a = kids[0], b = kids[1];
            clause({nd, a.negated(), b});
            clause({nd, a, b.negated()});
            clause({d, a, b});
            clause({d, a.negated(), b.negated()});
            break;
        }
        default: break;
        }
        return d;
    }

    std::unordered_set<std::string> taken_;
    // Equal gates over equal inputs share one definition variable.
    std::map<std::pair<Kind, std::vector<Literal>>, Literal> gates_;
    std::size_t counter_ = 0;
    std::vector<Clause> out_;
};

using ClauseSet = std::set<Clause>;

ClauseSet product(const ClauseSet& a, const ClauseSet& b)
{
    ClauseSet out;
    for (const auto& x : a)
        for (const auto& y : b) {
            std::vector<Literal> lits = x.literals();
            lits.insert(lits.end(), y.begin(), y.end());
            Clause c(std::move(lits));
            if (!c.tautological())
                out.insert(std::move(c));
        }
    return out;
}

ClauseSet merge(ClauseSet a, const ClauseSet& b)
{
    a.insert(b.begin(), b.end());
    return a;
}

// Clauses of g (positive polarity) or of !g (negative polarity).
ClauseSet distribute(const Formula& g, bool positive)
{
    switch (g.kind()) {
    case Kind::Constant:
        return g.constant_value() == positive ? ClauseSet{} : ClauseSet{Clause{}};
    case Kind::Variable:
        return {Clause{Literal{g.var(), positive}}};
    case Kind::Not:
        return distribute(g.child(0), !positive);
    case Kind::And:
    case Kind::Or: {
        // A conjunction in positive position (or a disjunction in negative
        // position) unions its children's clauses; otherwise they multiply.
        const bool unions = (g.kind() == Kind::And) == positive;
        ClauseSet acc = unions ? ClauseSet{} : ClauseSet{Clause{}};
        for (const auto& c : g.children())
            acc = unions ? merge(std::move(acc), distribute(c, positive)) : product(acc, distribute(c, positive));
        return acc;
    }
    case Kind::Implies:
        if (positive)
            return product(distribute(g.child(0), false), distribute(g.child(1), true));
        return merge(distribute(g.child(0), true), distribute(g.child(1), false));
    case Kind::Iff: {
        const auto& a = g.child(0);
        const auto& b = g.child(1);
        if (positive)
            return merge(product(distribute(a, false), distribute(b, true)),
                         product(distribute(a, true), distribute(b, false)));
        return merge(product(distribute(a, true), distribute(b, true)),
                     product(distribute(a, false), distribute(b, false)));
    }
    }
    return {};
}

std::optional<Literal> literal_of(const Formula& g)
{
    if (g.is_variable())
        return Literal{g.var(), true};
    if (g.kind() == Kind::Not && g.child(0).is_variable())
        return Literal{g.child(0).var(), false};
    return std::nullopt;
}

std::optional<Clause> clause_of(const Formula& g)
{
    if (auto l = literal_of(g))
        return Clause{*l};
    if (g.kind() != Kind::Or)
        return std::nullopt;
    std::vector<Literal> lits;
    for (const auto& c : g.children()) {
        auto l = literal_of(c);
        if (!l)
            return std::nullopt;
        lits.push_back(*l);
    }
    return Clause(std::move(lits));
}

bool collect_conjuncts(const Formula& g, std::vector<Clause>& out)
{
    if (g.kind() == Kind::And) {
        for (const auto& c : g.children())
            if (!collect_conjuncts(c, out))
                return false;
        return true;
    }
    if (g.is_constant()) {
        if (!g.constant_value())
            out.emplace_back();
        return true;
    }
    auto c = clause_of(g);
    if (!c)
        return false;
    out.push_back(std::move(*c));
    return true;
}

Formula literal_formula(const Literal& l)
{
    auto v = Formula::variable(l.var);
    return l.positive ? v : make_not(std::move(v));
}

} // namespace

Cnf to_cnf(const Formula& f)
{
    const auto simplified = simplify_constants(f);
    Tseitin t(simplified);
    t.add_top(simplified);
    return t.take();
}

Cnf to_cnf_equivalent(const Formula& f)
{
    const auto n = variables(f).size();
    if (n > equivalent_cnf_max_vars)
        throw CapExceeded("equivalence-preserving clausification is limited to " +
                          std::to_string(equivalent_cnf_max_vars) + " variables (formula has " + std::to_string(n) +
                          ")");
    auto clauses = distribute(simplify_constants(f), true);
    return Cnf(std::vector<Clause>(clauses.begin(), clauses.end()));
}

std::optional<Cnf> cnf_shape(const Formula& f)
{
    std::vector<Clause> clauses;
    if (f.is_constant() && f.constant_value())
        return Cnf{};
    if (!collect_conjuncts(f, clauses))
        return std::nullopt;
    return Cnf(std::move(clauses));
}

Formula cnf_to_formula(const Cnf& c)
{
    std::vector<Formula> conjuncts;
    for (const auto& clause : c) {
        std::vector<Formula> lits;
        for (const auto& l : clause)
            lits.push_back(literal_formula(l));
        conjuncts.push_back(disjoin(std::move(lits)));
    }
    return conjoin(std::move(conjuncts));
}

std::ostream& operator<<(std::ostream& os, const Literal& l) { return os << (l.positive ? "" : "!") << l.var.name(); }

std::ostream& operator<<(std::ostream& os, const Clause& c)
{
    os << '{';
    bool first = true;
    for (const auto& l : c) {
        os << (first ? "" : ", ") << l;
        first = false;
    }
    return os << '}';
}

std::ostream& operator<<(std::ostream& os, const Cnf& c)
{
    os << '{';
    bool first = true;
    for (const auto& cl : c) {
        os << (first ? "" : ", ") << cl;
        first = false;
    }
    return os << '}';
}

} // namespace lexirev
