#include "oracle.hpp"

#include "lexirev/errors.hpp"
#include "lexirev/parser.hpp"
#include "lexirev/solver.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace lexirev;

namespace {

Formula p(const char* text) { return parse_formula(text); }

Model ab(bool a, bool b) { return Model::of({{"a", a}, {"b", b}}); }

RevisionSequence seq(std::vector<std::string> texts, std::vector<const char*> vars = {})
{
    auto s = RevisionSequence::parse(texts);
    if (vars.empty())
        return s;
    std::vector<Var> vs;
    for (const char* v : vars)
        vs.emplace_back(v);
    return s.over(Alphabet(vs));
}

} // namespace

TEST_CASE("sequence alphabets")
{
    const auto s = seq({"b & a", "c"});
    REQUIRE(s.alphabet().size() == 3);
    CHECK(s.alphabet()[0] == Var("b"));
    CHECK(RevisionSequence().empty());
    CHECK_THROWS_AS(RevisionSequence({p("a & z")}, Alphabet({Var("a")})), AlphabetMismatch);
    CHECK(s.over(Alphabet({Var("b"), Var("a"), Var("c"), Var("d")})).alphabet().size() == 4);
    // Widening keeps the given order first.
    const auto widened = s.over(Alphabet({Var("a")}));
    REQUIRE(widened.alphabet().size() == 3);
    CHECK(widened.alphabet()[0] == Var("a"));

    const auto t = s.without(0);
    CHECK(t.size() == 1);
    CHECK(t.alphabet() == s.alphabet());
    CHECK(s.slice(1, 2).formulas() == t.formulas());

    const auto joined = concat(seq({"a"}), seq({"b", "a | c"}));
    CHECK(joined.size() == 3);
    CHECK(joined.alphabet().size() == 3);

    std::ostringstream os;
    os << seq({"a", "!a | b"});
    CHECK(os.str() == "[a, !a | b]");
}

TEST_CASE("order induced by a single formula")
{
    const auto a = p("a");
    CHECK(leq_formula(Model::of({{"a", true}}), Model::of({{"a", false}}), a));
    CHECK_FALSE(leq_formula(Model::of({{"a", false}}), Model::of({{"a", true}}), a));
    CHECK(leq_formula(Model::of({{"a", true}}), Model::of({{"a", true}}), a));
    CHECK_THROWS_AS(leq_formula(Model::of({{"a", true}}), Model::of({{"b", true}}), a), AlphabetMismatch);
}

TEST_CASE("lexicographic order")
{
    const RevisionSequence empty;
    CHECK(leq(ab(1, 0), ab(0, 1), empty.over(Alphabet({Var("a"), Var("b")}))));
    CHECK(compare(ab(1, 0), ab(0, 1), empty.over(Alphabet({Var("a"), Var("b")}))) == OrderVerdict::Equivalent);

    const auto just_a = seq({"a"}, {"a", "b"});
    CHECK(leq(ab(1, 0), ab(1, 1), just_a));
    CHECK(leq(ab(1, 1), ab(1, 0), just_a));
    CHECK(compare(ab(1, 0), ab(0, 0), just_a) == OrderVerdict::StrictlyLess);

    // [a, b]: 11 < 10 < 01 < 00.
    const auto a_b = seq({"a", "b"});
    const std::vector<Model> chain{ab(1, 1), ab(1, 0), ab(0, 1), ab(0, 0)};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const auto expected = i < j ? OrderVerdict::StrictlyLess
                                : i == j ? OrderVerdict::Equivalent
                                         : OrderVerdict::StrictlyGreater;
            CHECK(compare(chain[i], chain[j], a_b) == expected);
        }
}

TEST_CASE("the order is a connected preorder")
{
    oracle::Generator gen(31);
    const std::vector<Var> vars{Var("a"), Var("b"), Var("c")};
    const Alphabet alphabet(vars);
    auto models_range = enumerate_models(alphabet);
    const std::vector<Model> models(models_range.begin(), models_range.end());
    for (int k = 0; k < 60; ++k) {
        const RevisionSequence s(gen.sequence(vars, 4, 2), alphabet);
        for (const auto& i : models) {
            REQUIRE(leq(i, i, s));
            for (const auto& j : models) {
                REQUIRE((leq(i, j, s) || leq(j, i, s)));
                if (!leq(i, j, s))
                    continue;
                for (const auto& l : models)
                    if (leq(j, l, s))
                        REQUIRE(leq(i, l, s));
            }
        }
    }
}

TEST_CASE("leq agrees with the test-side table")
{
    oracle::Generator gen(32);
    const auto vars = oracle::make_vars(3);
    const Alphabet alphabet(vars);
    for (int k = 0; k < 100; ++k) {
        const auto fs = gen.sequence(vars, 4, 3);
        const RevisionSequence s(fs, alphabet);
        const oracle::SequenceTable table(fs, vars);
        for (oracle::Bits i = 0; i < 8; ++i)
            for (oracle::Bits j = 0; j < 8; ++j)
                REQUIRE(leq(oracle::model_of(vars, i), oracle::model_of(vars, j), s) == table.leq(i, j));
    }
}

TEST_CASE("brute-force equivalence")
{
    CHECK(equivalent_bruteforce(seq({"a & b", "a & !b", "!a & b", "!a & !b"}), seq({"a", "b"})).is_equivalent());

    // [a] against []: the only disagreement is i = {a:0}, j = {a:1}, which
    // [a] orders strictly and [] ties.
    const auto r = equivalent_bruteforce(seq({"a"}), RevisionSequence({}, Alphabet({Var("a")})));
    REQUIRE_FALSE(r.is_equivalent());
    CHECK(r.witness().i == Model::of({{"a", false}}));
    CHECK(r.witness().j == Model::of({{"a", true}}));

    const auto w = equivalent_bruteforce(seq({"a"}, {"a", "b"}), seq({"a", "!a | b"}));
    REQUIRE_FALSE(w.is_equivalent());
    CHECK(w.witness().i == ab(1, 0));
    CHECK(w.witness().j == ab(1, 1));
    CHECK_THROWS_AS(equivalent_bruteforce(seq({"a"}), seq({"a"})).witness(), std::logic_error);

    // Alphabets are united.
    CHECK_FALSE(equivalent_bruteforce(seq({"a"}), seq({"b"})).is_equivalent());
}

TEST_CASE("brute force returns the first disagreeing pair")
{
    oracle::Generator gen(33);
    const auto vars = oracle::make_vars(3);
    for (int k = 0; k < 300; ++k) {
        const auto s = gen.sequence(vars, 3, 2);
        const auto r = gen.sequence(vars, 3, 2);
        const Alphabet alphabet(vars);
        const auto result = equivalent_bruteforce(RevisionSequence(s, alphabet), RevisionSequence(r, alphabet));
        // The oracle counts with bit k = vars[k]; the library counts with
        // vars[0] most significant. Reverse the list to line them up.
        const std::vector<Var> reversed(vars.rbegin(), vars.rend());
        const auto first = oracle::first_difference(s, r, reversed);
        REQUIRE(result.is_equivalent() == !first);
        if (first) {
            CHECK(oracle::bits_of(result.witness().i, reversed) == first->first);
            CHECK(oracle::bits_of(result.witness().j, reversed) == first->second);
        }
    }
}

TEST_CASE("brute force respects the enumeration budget")
{
    std::vector<std::string> many;
    for (int k = 0; k < 11; ++k)
        many.push_back("v" + std::to_string(k));
    const auto s = RevisionSequence::parse(many);
    CHECK_THROWS_AS(equivalent_bruteforce(s, s), CapExceeded);
    Limits wide;
    wide.max_vars = 22;
    const auto small = RevisionSequence::parse({"a", "b"});
    CHECK(equivalent_bruteforce(small, small, wide).is_equivalent());
}

TEST_CASE("limits from the environment")
{
    ::setenv("LEXIREV_MAX_VARS", "8", 1);
    CHECK(Limits::from_environment().max_vars == 8);
    ::setenv("LEXIREV_MAX_VARS", "eight", 1);
    CHECK_THROWS_AS(Limits::from_environment(), Error);
    ::unsetenv("LEXIREV_MAX_VARS");
    CHECK(Limits::from_environment().max_vars == 20);
}

TEST_CASE("Q-conjunctions")
{
    CHECK(q_conjunction(seq({"a", "b"}), {true, false}) == p("a & !b"));
    CHECK(q_conjunction(RevisionSequence(), {}) == Formula::constant(true));
    CHECK(q_conjunction(seq({"a"}), {true}) == p("a"));
    CHECK_THROWS_AS(q_conjunction(seq({"a"}), {true, true}), std::invalid_argument);
}

TEST_CASE("redundancy of the last formula by Q-conjunctions")
{
    const auto sat = sat_entailment();
    CHECK(redundant_last_by_conjunctions(seq({"x", "x | (!x & y & (z & !z))"}), sat));
    CHECK(redundant_last_by_conjunctions(seq({"a", "a"}), sat));
    CHECK_FALSE(redundant_last_by_conjunctions(seq({"a", "b"}), sat));
    CHECK(redundant_last_by_conjunctions(seq({"a"}), sat) == false);
    CHECK(redundant_last_by_conjunctions(seq({"true"}), sat));
    CHECK_THROWS_AS(redundant_last_by_conjunctions(RevisionSequence(), sat), std::invalid_argument);

    Limits tight;
    tight.max_conjunction_formulas = 2;
    CHECK_THROWS_AS(redundant_last_by_conjunctions(seq({"a", "b", "c", "a"}), sat, tight), CapExceeded);

    // The same verdicts with the test-side entailment.
    const EntailmentOracle truth = [](const Formula& f, const Formula& g) { return oracle::entails(f, g); };
    oracle::Generator gen(34);
    const auto vars = oracle::make_vars(3);
    for (int k = 0; k < 300; ++k) {
        auto s = gen.sequence(vars, 3, 2);
        s.push_back(gen.formula(vars, 2));
        REQUIRE(redundant_last_by_conjunctions(RevisionSequence(s), truth) == oracle::redundant_last(s));
    }
}
