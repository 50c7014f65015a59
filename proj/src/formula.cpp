#include "lexirev/formula.hpp"

#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace lexirev {

bool is_identifier(std::string_view text)
{
    if (text.empty() || std::isdigit(static_cast<unsigned char>(text.front())))
        return false;
    for (char c : text)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

Var::Var(std::string name) : name_(std::move(name))
{
    if (!is_identifier(name_))
        throw std::invalid_argument("invalid variable name '" + name_ + "'");
}

std::ostream& operator<<(std::ostream& os, const Var& v) { return os << v.name(); }

struct Formula::Node {
    Kind kind;
    bool value = false;
    std::optional<Var> var;
    std::vector<Formula> children;
};

Formula make_node(Kind kind, std::vector<Formula> children)
{
    auto node = std::make_shared<Formula::Node>();
    node->kind = kind;
    node->children = std::move(children);
    return Formula(std::move(node));
}

Formula Formula::constant(bool value)
{
    static const Formula truth = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Constant;
        n->value = true;
        return Formula(std::move(n));
    }();
    static const Formula falsity = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Constant;
        n->value = false;
        return Formula(std::move(n));
    }();
    return value ? truth : falsity;
}

Formula Formula::variable(Var v)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Variable;
    n->var = std::move(v);
    return Formula(std::move(n));
}

Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::constant_value() const
{
    if (node_->kind != Kind::Constant)
        throw std::logic_error("constant_value() on a non-constant formula");
    return node_->value;
}

const Var& Formula::var() const
{
    if (node_->kind != Kind::Variable)
        throw std::logic_error("var() on a non-variable formula");
    return *node_->var;
}

std::span<const Formula> Formula::children() const noexcept { return node_->children; }

bool operator==(const Formula& a, const Formula& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.kind() != b.kind())
        return false;
    switch (a.kind()) {
    case Kind::Constant: return a.constant_value() == b.constant_value();
    case Kind::Variable: return a.var() == b.var();
    default: break;
    }
    auto ca = a.children();
    auto cb = b.children();
    if (ca.size() != cb.size())
        return false;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (!(ca[i] == cb[i]))
            return false;
    return true;
}

Formula make_not(Formula f) { return make_node(Kind::Not, {std::move(f)}); }

Formula make_and(std::vector<Formula> children)
{
    if (children.size() < 2)
        throw std::invalid_argument("conjunction needs at least two children");
    return make_node(Kind::And, std::move(children));
}

Formula make_or(std::vector<Formula> children)
{
    if (children.size() < 2)
        throw std::invalid_argument("disjunction needs at least two children");
    return make_node(Kind::Or, std::move(children));
}

Formula make_implies(Formula lhs, Formula rhs) { return make_node(Kind::Implies, {std::move(lhs), std::move(rhs)}); }

Formula make_iff(Formula lhs, Formula rhs) { return make_node(Kind::Iff, {std::move(lhs), std::move(rhs)}); }

Formula conjoin(std::vector<Formula> parts)
{
    if (parts.empty())
        return Formula::constant(true);
    if (parts.size() == 1)
        return std::move(parts.front());
    return make_and(std::move(parts));
}

Formula disjoin(std::vector<Formula> parts)
{
    if (parts.empty())
        return Formula::constant(false);
    if (parts.size() == 1)
        return std::move(parts.front());
    return make_or(std::move(parts));
}

namespace {

void collect_vars(const Formula& f, std::vector<Var>& out, std::unordered_set<Var>& seen)
{
    if (f.is_variable()) {
        if (seen.insert(f.var()).second)
            out.push_back(f.var());
        return;
    }
    for (const auto& c : f.children())
        collect_vars(c, out, seen);
}

Formula rebuild(const Formula& f, std::vector<Formula> children)
{
    switch (f.kind()) {
    case Kind::Not: return make_not(std::move(children[0]));
    case Kind::And: return make_and(std::move(children));
    case Kind::Or: return make_or(std::move(children));
    case Kind::Implies: return make_implies(std::move(children[0]), std::move(children[1]));
    case Kind::Iff: return make_iff(std::move(children[0]), std::move(children[1]));
    default: return f;
    }
}

Formula rename_impl(const Formula& f, const std::function<Var(const Var&)>& mapping)
{
    if (f.is_constant())
        return f;
    if (f.is_variable())
        return Formula::variable(mapping(f.var()));
    std::vector<Formula> children;
    children.reserve(f.children().size());
    for (const auto& c : f.children())
        children.push_back(rename_impl(c, mapping));
    return rebuild(f, std::move(children));
}

} // namespace

std::vector<Var> variables(const Formula& f)
{
    std::vector<Var> out;
    std::unordered_set<Var> seen;
    collect_vars(f, out, seen);
    return out;
}

std::set<Var> variable_set(const Formula& f)
{
    auto vs = variables(f);
    return {vs.begin(), vs.end()};
}

std::size_t size(const Formula& f)
{
    std::size_t n = 1;
    for (const auto& c : f.children())
        n += size(c);
    return n;
}

Formula rename(const Formula& f, const std::function<Var(const Var&)>& mapping)
{
    std::unordered_set<Var> images;
    for (const auto& v : variables(f))
        if (!images.insert(mapping(v)).second)
            throw std::invalid_argument("renaming is not injective on the formula's variables");
    return rename_impl(f, mapping);
}

Formula rename(const Formula& f, const std::map<Var, Var>& mapping)
{
    return rename(f, [&mapping](const Var& v) {
        auto it = mapping.find(v);
        return it == mapping.end() ? v : it->second;
    });
}

Formula simplify_constants(const Formula& f)
{
    const auto truth = Formula::constant(true);
    const auto falsity = Formula::constant(false);
    auto is_const = [](const Formula& g, bool value) { return g.is_constant() && g.constant_value() == value; };

    switch (f.kind()) {
    case Kind::Constant:
    case Kind::Variable:
        return f;
    case Kind::Not: {
        auto c = simplify_constants(f.child(0));
        if (c.is_constant())
            return Formula::constant(!c.constant_value());
        return make_not(std::move(c));
    }
    case Kind::And:
    case Kind::Or: {
        const bool conj = f.kind() == Kind::And;
        // For a conjunction, false absorbs and true is neutral; dually for a disjunction.
        std::vector<Formula> kept;
        for (const auto& child : f.children()) {
            auto c = simplify_constants(child);
            if (is_const(c, !conj))
                return conj ? falsity : truth;
            if (!is_const(c, conj))
                kept.push_back(std::move(c));
        }
        return conj ? conjoin(std::move(kept)) : disjoin(std::move(kept));
    }
    case Kind::Implies: {
        auto l = simplify_constants(f.child(0));
        auto r = simplify_constants(f.child(1));
        if (is_const(l, false) || is_const(r, true))
            return truth;
        if (is_const(l, true))
            return r;
        if (is_const(r, false))
            return make_not(std::move(l));
        return make_implies(std::move(l), std::move(r));
    }
    case Kind::Iff: {
        auto l = simplify_constants(f.child(0));
        auto r = simplify_constants(f.child(1));
        if (l.is_constant() && r.is_constant())
            return Formula::constant(l.constant_value() == r.constant_value());
        if (l.is_constant())
            std::swap(l, r);
        if (r.is_constant())
            return r.constant_value() ? l : make_not(std::move(l));
        return make_iff(std::move(l), std::move(r));
    }
    }
    return f;
}

namespace {

// Binding strength, loosest first; matches the grammar's layering.
int precedence(Kind k)
{
    switch (k) {
    case Kind::Iff: return 0;
    case Kind::Implies: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    case Kind::Not: return 4;
    default: return 5;
    }
}

void print(std::ostream& os, const Formula& f);

void print_child(std::ostream& os, const Formula& child, bool parenthesize)
{
    if (parenthesize)
        os << '(';
    print(os, child);
    if (parenthesize)
        os << ')';
}

void print(std::ostream& os, const Formula& f)
{
    const int p = precedence(f.kind());
    switch (f.kind()) {
    case Kind::Constant: os << (f.constant_value() ? "true" : "false"); return;
    case Kind::Variable: os << f.var().name(); return;
    case Kind::Not:
        os << '!';
        print_child(os, f.child(0), precedence(f.child(0).kind()) < p);
        return;
    case Kind::And:
    case Kind::Or: {
        const char* sep = f.kind() == Kind::And ? " & " : " | ";
        bool first = true;
        for (const auto& c : f.children()) {
            if (!first)
                os << sep;
            first = false;
            // A nested node of the same kind must stay a separate node.
            print_child(os, c, precedence(c.kind()) <= p);
        }
        return;
    }
    case Kind::Implies:
        print_child(os, f.child(0), precedence(f.child(0).kind()) <= p);
        os << " -> ";
        print_child(os, f.child(1), precedence(f.child(1).kind()) < p);
        return;
    case Kind::Iff:
        print_child(os, f.child(0), precedence(f.child(0).kind()) < p);
        os << " <-> ";
        print_child(os, f.child(1), precedence(f.child(1).kind()) <= p);
        return;
    }
}

} // namespace

std::string to_string(const Formula& f)
{
    std::ostringstream os;
    print(os, f);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f)
{
    print(os, f);
    return os;
}

} // namespace lexirev
