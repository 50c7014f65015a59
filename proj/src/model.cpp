#include "lexirev/model.hpp"

#include "lexirev/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace lexirev {

Alphabet::Alphabet(std::vector<Var> vars) : vars_(std::move(vars))
{
    index_.reserve(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (!index_.emplace(vars_[i].name(), i).second)
            throw std::invalid_argument("duplicate variable '" + vars_[i].name() + "' in alphabet");
}

std::optional<std::size_t> Alphabet::index_of(const Var& v) const
{
    auto it = index_.find(v.name());
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Alphabet Alphabet::with(const Var& v) const
{
    if (contains(v))
        return *this;
    auto vars = vars_;
    vars.push_back(v);
    return Alphabet(std::move(vars));
}

Alphabet unite(const Alphabet& a, const Alphabet& b)
{
    auto vars = a.vars();
    for (const auto& v : b)
        if (!a.contains(v))
            vars.push_back(v);
    return Alphabet(std::move(vars));
}

Model::Model(std::shared_ptr<const Alphabet> alphabet, std::vector<bool> values)
    : alphabet_(std::move(alphabet)), values_(std::move(values))
{
    if (!alphabet_)
        throw std::invalid_argument("model without alphabet");
    if (alphabet_->size() != values_.size())
        throw std::invalid_argument("model must assign every variable of its alphabet exactly once");
}

Model Model::of(std::initializer_list<std::pair<const char*, bool>> values)
{
    std::vector<std::pair<Var, bool>> converted;
    for (const auto& [name, value] : values)
        converted.emplace_back(Var(name), value);
    return of(converted);
}

Model Model::of(const std::vector<std::pair<Var, bool>>& values)
{
    std::vector<Var> vars;
    std::vector<bool> bits;
    for (const auto& [v, b] : values) {
        vars.push_back(v);
        bits.push_back(b);
    }
    return Model(std::make_shared<const Alphabet>(std::move(vars)), std::move(bits));
}

bool Model::value(const Var& v) const
{
    if (auto b = find(v))
        return *b;
    throw UnboundVariable(v.name());
}

std::optional<bool> Model::find(const Var& v) const
{
    if (auto i = alphabet_->index_of(v))
        return values_[*i];
    return std::nullopt;
}

bool operator==(const Model& a, const Model& b)
{
    return a.values_ == b.values_ && (a.alphabet_ == b.alphabet_ || *a.alphabet_ == *b.alphabet_);
}

std::ostream& operator<<(std::ostream& os, const Model& m)
{
    os << '{';
    for (std::size_t i = 0; i < m.size(); ++i)
        os << (i ? " " : "") << m.alphabet()[i].name() << ':' << (m.at(i) ? 1 : 0);
    return os << '}';
}

bool eval(const Formula& f, const Model& m)
{
    switch (f.kind()) {
    case Kind::Constant: return f.constant_value();
    case Kind::Variable: return m.value(f.var());
    case Kind::Not: return !eval(f.child(0), m);
    case Kind::And:
        for (const auto& c : f.children())
            if (!eval(c, m))
                return false;
        return true;
    case Kind::Or:
        for (const auto& c : f.children())
            if (eval(c, m))
                return true;
        return false;
    case Kind::Implies: return !eval(f.child(0), m) || eval(f.child(1), m);
    case Kind::Iff: return eval(f.child(0), m) == eval(f.child(1), m);
    }
    return false;
}

Model ModelEnumeration::iterator::operator*() const
{
    const auto& alphabet = *alphabet_;
    const std::size_t n = alphabet->size();
    std::vector<bool> values(n);
    for (std::size_t k = 0; k < n; ++k)
        values[k] = (index_ >> (n - 1 - k)) & 1U;
    return Model(alphabet, std::move(values));
}

ModelEnumeration::ModelEnumeration(std::shared_ptr<const Alphabet> alphabet)
    : alphabet_(std::move(alphabet)), count_(std::uint64_t{1} << alphabet_->size())
{
}

Model ModelEnumeration::at(std::uint64_t index) const { return *iterator(&alphabet_, index); }

ModelEnumeration enumerate_models(std::shared_ptr<const Alphabet> alphabet, std::size_t cap)
{
    if (alphabet->size() > cap)
        throw CapExceeded("cannot enumerate models of " + std::to_string(alphabet->size()) +
                          " variables (cap is " + std::to_string(cap) + ")");
    return ModelEnumeration(std::move(alphabet));
}

ModelEnumeration enumerate_models(const Alphabet& alphabet, std::size_t cap)
{
    return enumerate_models(std::make_shared<const Alphabet>(alphabet), cap);
}

} // namespace lexirev
