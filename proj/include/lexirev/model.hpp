#pragma once

#include "lexirev/formula.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lexirev {

/// Ordered, duplicate-free set of variables.
class Alphabet {
public:
    Alphabet() = default;
    /// Throws std::invalid_argument on duplicates.
    explicit Alphabet(std::vector<Var> vars);

    std::size_t size() const noexcept { return vars_.size(); }
    bool empty() const noexcept { return vars_.empty(); }
    const Var& operator[](std::size_t i) const { return vars_[i]; }
    const std::vector<Var>& vars() const noexcept { return vars_; }
    auto begin() const noexcept { return vars_.begin(); }
    auto end() const noexcept { return vars_.end(); }

    std::optional<std::size_t> index_of(const Var& v) const;
    bool contains(const Var& v) const { return index_of(v).has_value(); }

    /// Returns a copy extended by `v` if absent.
    Alphabet with(const Var& v) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.vars_ == b.vars_; }

private:
    std::vector<Var> vars_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Variables of `a` followed by those of `b` not already in `a`.
Alphabet unite(const Alphabet& a, const Alphabet& b);

/// Total truth assignment over an alphabet.
class Model {
public:
    Model(std::shared_ptr<const Alphabet> alphabet, std::vector<bool> values);

    /// Builds a model together with its alphabet, in the given order.
    static Model of(std::initializer_list<std::pair<const char*, bool>> values);
    static Model of(const std::vector<std::pair<Var, bool>>& values);

    const Alphabet& alphabet() const noexcept { return *alphabet_; }
    const std::shared_ptr<const Alphabet>& alphabet_ptr() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return values_.size(); }

    bool at(std::size_t index) const { return values_.at(index); }
    /// Throws UnboundVariable if v is outside the alphabet.
    bool value(const Var& v) const;
    std::optional<bool> find(const Var& v) const;
    const std::vector<bool>& values() const noexcept { return values_; }

    friend bool operator==(const Model& a, const Model& b);

private:
    std::shared_ptr<const Alphabet> alphabet_;
    std::vector<bool> values_;
};

std::ostream& operator<<(std::ostream& os, const Model& m);

/// Classical truth value. Throws UnboundVariable for variables outside the
/// model's alphabet.
bool eval(const Formula& f, const Model& m);

/// Lazily enumerates the 2^n models of an alphabet by binary counting: the
/// first variable is the most significant bit, so the first model is
/// all-false and the last all-true.
class ModelEnumeration {
public:
    class iterator {
    public:
        using value_type = Model;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        Model operator*() const;
        iterator& operator++() { ++index_; return *this; }
        iterator operator++(int) { auto tmp = *this; ++index_; return tmp; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        friend class ModelEnumeration;
        iterator(const std::shared_ptr<const Alphabet>* alphabet, std::uint64_t index)
            : alphabet_(alphabet), index_(index) {}
        const std::shared_ptr<const Alphabet>* alphabet_ = nullptr;
        std::uint64_t index_ = 0;
    };

    explicit ModelEnumeration(std::shared_ptr<const Alphabet> alphabet);

    iterator begin() const { return {&alphabet_, 0}; }
    iterator end() const { return {&alphabet_, count_}; }
    std::uint64_t count() const noexcept { return count_; }
    /// The model with the given binary-counting index.
    Model at(std::uint64_t index) const;

private:
    std::shared_ptr<const Alphabet> alphabet_;
    std::uint64_t count_;
};

inline constexpr std::size_t default_enumeration_cap = 20;

/// Throws CapExceeded when the alphabet has more than `cap` variables.
ModelEnumeration enumerate_models(std::shared_ptr<const Alphabet> alphabet,
                                  std::size_t cap = default_enumeration_cap);
ModelEnumeration enumerate_models(const Alphabet& alphabet, std::size_t cap = default_enumeration_cap);

} // namespace lexirev
