#include "lexirev/encoder.hpp"

#include "lexirev/dimacs.hpp"
#include "lexirev/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace lexirev {

namespace {

std::vector<Var> family(const std::string& prefix, std::size_t count)
{
    std::vector<Var> out;
    for (std::size_t i = 1; i <= count; ++i)
        out.emplace_back(prefix + std::to_string(i));
    return out;
}

} // namespace

EncodingContext::EncodingContext(Alphabet x, std::size_t s_length, std::size_t r_length)
    : x_(std::move(x)), m_(family("__m_", s_length)), e_(family("__e_", s_length)), n_(family("__n_", r_length)),
      f_(family("__f_", r_length)), a_("__a"), b_("__b")
{
    for (const auto& v : x_) {
        y_.emplace_back("__y_" + v.name());
        z_.emplace_back("__z_" + v.name());
    }
    for (const auto* fam : {&y_, &z_, &m_, &e_, &n_, &f_})
        for (const auto& v : *fam)
            if (x_.contains(v))
                throw std::invalid_argument("variable '" + v.name() + "' clashes with the encoding's fresh names");
    if (x_.contains(a_) || x_.contains(b_))
        throw std::invalid_argument("variables '__a' and '__b' are reserved by the encoding");
}

Formula EncodingContext::substitute(const Formula& g, const std::vector<Var>& image) const
{
    return rename(g, [&](const Var& v) {
        const auto k = x_.index_of(v);
        if (!k)
            throw AlphabetMismatch("variable '" + v.name() + "' is outside the encoded alphabet");
        return image[*k];
    });
}

Formula EncodingContext::to_y(const Formula& g) const { return substitute(g, y_); }
Formula EncodingContext::to_z(const Formula& g) const { return substitute(g, z_); }

Formula strict_formula(const Formula& s_i, const EncodingContext& ctx)
{
    return make_and({ctx.to_y(s_i), make_not(ctx.to_z(s_i))});
}

Formula equiv_formula(const Formula& s_i, const EncodingContext& ctx)
{
    return make_iff(ctx.to_y(s_i), ctx.to_z(s_i));
}

Formula order_formula(const std::vector<Var>& m, const std::vector<Var>& e)
{
    if (m.size() != e.size())
        throw std::invalid_argument("ORDER needs as many m variables as e variables");
    if (m.empty())
        return Formula::constant(true);
    // Built innermost first; the innermost level is m_k | e_k since its tail is true.
    Formula acc = make_or({Formula::variable(m.back()), Formula::variable(e.back())});
    for (std::size_t k = m.size() - 1; k-- > 0;)
        acc = make_or({Formula::variable(m[k]), make_and({Formula::variable(e[k]), acc})});
    return acc;
}

namespace {

std::vector<Formula> padded(const RevisionSequence& s, std::size_t length)
{
    std::vector<Formula> out = s.formulas();
    const Formula filler = s.empty() ? Formula::constant(true) : s[s.size() - 1];
    while (out.size() < length)
        out.push_back(filler);
    return out;
}

void add_side(std::vector<Formula>& conjuncts, const std::vector<Formula>& seq, const std::vector<Var>& strict_vars,
              const std::vector<Var>& equiv_vars, const Var& result, const EncodingContext& ctx)
{
    for (std::size_t i = 0; i < seq.size(); ++i)
        conjuncts.push_back(make_iff(Formula::variable(strict_vars[i]), strict_formula(seq[i], ctx)));
    for (std::size_t i = 0; i < seq.size(); ++i)
        conjuncts.push_back(make_iff(Formula::variable(equiv_vars[i]), equiv_formula(seq[i], ctx)));
    conjuncts.push_back(make_iff(Formula::variable(result), order_formula(strict_vars, equiv_vars)));
}

} // namespace

DiffEncoding build_diff(const RevisionSequence& s, const RevisionSequence& r)
{
    // Even two empty sequences get one (true) level each, so the context is
    // never degenerate.
    const std::size_t length = std::max<std::size_t>({s.size(), r.size(), 1});
    EncodingContext ctx(unite(s.alphabet(), r.alphabet()), length, length);

    std::vector<Formula> conjuncts;
    add_side(conjuncts, padded(s, length), ctx.m(), ctx.e(), ctx.a(), ctx);
    add_side(conjuncts, padded(r, length), ctx.n(), ctx.f(), ctx.b(), ctx);
    conjuncts.push_back(make_not(make_iff(Formula::variable(ctx.a()), Formula::variable(ctx.b()))));
    return DiffEncoding{make_and(std::move(conjuncts)), std::move(ctx), length};
}

namespace {

std::vector<Var> diff_branch_order(const DiffEncoding& diff, const RevisionSequence& s, const RevisionSequence& r)
{
    // Variables named by more formulas first, each as its Y copy then its Z
    // copy; ties keep alphabet order.
    const auto& ctx = diff.context;
    std::unordered_map<Var, std::size_t> mentions;
    for (const auto* seq : {&s, &r})
        for (const auto& f : *seq)
            for (const auto& v : variables(f))
                ++mentions[v];
    std::vector<std::size_t> rank(ctx.x().size());
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t p, std::size_t q) {
        return mentions[ctx.x()[p]] > mentions[ctx.x()[q]];
    });
    std::vector<Var> order;
    for (std::size_t k : rank) {
        order.push_back(ctx.y()[k]);
        order.push_back(ctx.z()[k]);
    }
    return order;
}

} // namespace

EquivalenceResult check_equivalence(const RevisionSequence& s, const RevisionSequence& r, const SolveOptions& options)
{
    const auto diff = build_diff(s, r);
    SolveOptions tuned = options;
    if (tuned.branch_first.empty())
        tuned.branch_first = diff_branch_order(diff, s, r);
    const auto result = solve(to_cnf(diff.formula), tuned);
    if (!result.is_satisfiable())
        return EquivalenceResult::equivalent();

    const auto& ctx = diff.context;
    const auto& model = result.model();
    auto alphabet = std::make_shared<const Alphabet>(ctx.x());
    std::vector<bool> iv, jv;
    for (std::size_t k = 0; k < ctx.x().size(); ++k) {
        iv.push_back(model.find(ctx.y()[k]).value_or(false));
        jv.push_back(model.find(ctx.z()[k]).value_or(false));
    }
    Witness w{Model(alphabet, std::move(iv)), Model(alphabet, std::move(jv))};
    const auto wide_s = s.over(*alphabet);
    const auto wide_r = r.over(*alphabet);
    if (leq(w.i, w.j, wide_s) == leq(w.i, w.j, wide_r))
        throw std::logic_error("decoded witness does not separate the two orders");
    return EquivalenceResult::differs(std::move(w));
}

EquivalenceResult check_redundant_last(const RevisionSequence& s, const SolveOptions& options)
{
    if (s.empty())
        throw std::invalid_argument("an empty sequence has no last formula");
    return check_equivalence(s, s.without(s.size() - 1), options);
}

std::string diff_dimacs(const RevisionSequence& s, const RevisionSequence& r)
{
    return export_dimacs(to_cnf(build_diff(s, r).formula), NameComments::Emit);
}

} // namespace lexirev
