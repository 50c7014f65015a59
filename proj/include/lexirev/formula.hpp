#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace lexirev {

/// A propositional variable, identified by its name.
///
/// Names are identifiers: letters, digits and underscores, not starting with
/// a digit. Names beginning with "__" are accepted here (the encoders use
/// them for fresh variables) but rejected by the parser.
class Var {
public:
    explicit Var(std::string name);

    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const Var&, const Var&) = default;
    friend auto operator<=>(const Var&, const Var&) = default;

private:
    std::string name_;
};

bool is_identifier(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Var& v);

enum class Kind { Constant, Variable, Not, And, Or, Implies, Iff };

/// Immutable propositional formula tree.
///
/// Copies share structure; a Formula is never mutated after construction.
/// And/Or nodes have at least two children, Not has one, Implies and Iff
/// have exactly two (lhs, rhs).
class Formula {
public:
    static Formula constant(bool value);
    static Formula variable(Var v);
    static Formula variable(std::string name) { return variable(Var(std::move(name))); }

    Kind kind() const noexcept;
    bool is_constant() const noexcept { return kind() == Kind::Constant; }
    bool is_variable() const noexcept { return kind() == Kind::Variable; }

    /// Valid only for Kind::Constant.
    bool constant_value() const;
    /// Valid only for Kind::Variable.
    const Var& var() const;
    /// Empty for leaves.
    std::span<const Formula> children() const noexcept;
    const Formula& child(std::size_t i) const { return children()[i]; }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    friend Formula make_node(Kind kind, std::vector<Formula> children);

    std::shared_ptr<const Node> node_;
};

Formula make_not(Formula f);
/// Throws std::invalid_argument when given fewer than two children.
Formula make_and(std::vector<Formula> children);
Formula make_or(std::vector<Formula> children);
Formula make_implies(Formula lhs, Formula rhs);
Formula make_iff(Formula lhs, Formula rhs);

/// n-ary conjunction that degrades gracefully: [] is true, [f] is f.
Formula conjoin(std::vector<Formula> parts);
/// n-ary disjunction: [] is false, [f] is f.
Formula disjoin(std::vector<Formula> parts);

/// Variables in order of first occurrence (left to right).
std::vector<Var> variables(const Formula& f);
std::set<Var> variable_set(const Formula& f);

/// Number of nodes in the tree.
std::size_t size(const Formula& f);

/// Replaces each variable leaf per `mapping`; unmapped variables are kept.
/// Throws std::invalid_argument if two distinct variables of f would end up
/// with the same name.
Formula rename(const Formula& f, const std::map<Var, Var>& mapping);

/// Same as rename, with the new name computed by a function.
Formula rename(const Formula& f, const std::function<Var(const Var&)>& mapping);

/// Removes true/false leaves by the usual absorption rules. The result is
/// either a single constant or contains no constant at all.
Formula simplify_constants(const Formula& f);

/// Renders f in the concrete syntax accepted by parse_formula, with just
/// enough parentheses that parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

} // namespace lexirev

template <>
struct std::hash<lexirev::Var> {
    std::size_t operator()(const lexirev::Var& v) const noexcept { return std::hash<std::string>{}(v.name()); }
};
