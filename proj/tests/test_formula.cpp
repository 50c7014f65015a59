#include "oracle.hpp"

#include "lexirev/errors.hpp"
#include "lexirev/parser.hpp"

#include <doctest.h>

using namespace lexirev;

namespace {

Formula v(const char* name) { return Formula::variable(name); }
Formula p(const char* text) { return parse_formula(text); }

} // namespace

TEST_CASE("parser builds the grammar's tree shapes")
{
    CHECK(p("a & b") == make_and({v("a"), v("b")}));
    CHECK(p("!a | b") == make_or({make_not(v("a")), v("b")}));
    CHECK(p("a -> b -> c") == make_implies(v("a"), make_implies(v("b"), v("c"))));
    CHECK(p("a <-> b <-> c") == make_iff(make_iff(v("a"), v("b")), v("c")));
    CHECK(p("a & b & c") == make_and({v("a"), v("b"), v("c")}));
    CHECK(p("a | b & c") == make_or({v("a"), make_and({v("b"), v("c")})}));
    CHECK(p("a -> b | c") == make_implies(v("a"), make_or({v("b"), v("c")})));
    CHECK(p("a <-> b -> c") == make_iff(v("a"), make_implies(v("b"), v("c"))));
    CHECK(p("!!a") == make_not(make_not(v("a"))));
    CHECK(p("true") == Formula::constant(true));
    CHECK(p("false | x_1") == make_or({Formula::constant(false), v("x_1")}));
    CHECK(p("  ( a )\t") == v("a"));
    CHECK(p("a # trailing comment\n & b") == make_and({v("a"), v("b")}));
}

TEST_CASE("parse errors carry line and column")
{
    auto position = [](const char* text) {
        try {
            parse_formula(text);
        } catch (const ParseError& e) {
            return std::pair{e.line(), e.column()};
        }
        FAIL("no error for " << text);
        return std::pair<std::size_t, std::size_t>{};
    };
    CHECK(position("a &") == std::pair<std::size_t, std::size_t>{1, 4});
    CHECK(position("a b") == std::pair<std::size_t, std::size_t>{1, 3});
    CHECK(position("(a") == std::pair<std::size_t, std::size_t>{1, 3});
    CHECK(position("a &\n  | b") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(position("") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK_THROWS_AS(parse_formula("1a"), ParseError);
    CHECK_THROWS_AS(parse_formula("a $ b"), ParseError);
    CHECK_THROWS_AS(parse_formula("a -> "), ParseError);
}

TEST_CASE("identifiers with the reserved prefix are rejected by the parser only")
{
    CHECK_THROWS_AS(parse_formula("__y_a"), ParseError);
    CHECK_THROWS_AS(parse_formula("a & __t_1"), ParseError);
    CHECK_NOTHROW(Var("__y_a"));
    CHECK(p("_a") == v("_a"));
    CHECK_THROWS_AS(Var("1x"), std::invalid_argument);
    CHECK_THROWS_AS(Var(""), std::invalid_argument);
    CHECK(Var("a") == Var("a"));
    CHECK_FALSE(Var("a") == Var("b"));
}

TEST_CASE("printing round-trips through the parser")
{
    for (const char* text : {"!a | b", "a -> b -> c", "(a -> b) -> c", "a <-> (b <-> c)", "!(a & b)", "a & (b | c)",
                             "(a | b) & c", "true", "false & !true", "!(a -> b)", "(a <-> b) -> c"}) {
        const auto f = p(text);
        CHECK(parse_formula(to_string(f)) == f);
    }
    CHECK(to_string(p("(a -> b) -> c")) == "(a -> b) -> c");
    CHECK(to_string(p("!a | b")) == "!a | b");

    oracle::Generator gen(11);
    const auto vars = oracle::make_vars(3);
    for (int k = 0; k < 2000; ++k) {
        const auto f = gen.formula(vars, 4);
        REQUIRE(parse_formula(to_string(f)) == f);
    }
}

TEST_CASE("eval follows classical semantics")
{
    CHECK(eval(p("a & b"), Model::of({{"a", true}, {"b", true}})));
    CHECK_FALSE(eval(p("a & b"), Model::of({{"a", true}, {"b", false}})));
    CHECK(eval(Formula::constant(true), Model::of({})));
    CHECK(eval(Formula::constant(true), Model::of({{"q", false}})));
    CHECK_THROWS_AS(eval(p("a & c"), Model::of({{"a", true}})), UnboundVariable);

    oracle::Generator gen(12);
    const auto vars = oracle::make_vars(2);
    for (int k = 0; k < 3000; ++k) {
        const auto f = gen.formula(vars, 3);
        for (oracle::Bits m = 0; m < 4; ++m)
            REQUIRE(eval(f, oracle::model_of(vars, m)) == oracle::eval_bits(f, vars, m));
    }
}

TEST_CASE("variables are listed in order of first occurrence")
{
    const auto vs = variables(p("c & (a | c) -> b"));
    REQUIRE(vs.size() == 3);
    CHECK(vs[0] == Var("c"));
    CHECK(vs[1] == Var("a"));
    CHECK(vs[2] == Var("b"));
    CHECK(variables(p("true")).empty());
    CHECK(size(p("a & !b")) == 4);
}

TEST_CASE("rename substitutes leaves")
{
    const std::map<Var, Var> to_y{{Var("x1"), Var("y1")}, {Var("x2"), Var("y2")}};
    CHECK(rename(p("x1 | !x2"), to_y) == p("y1 | !y2"));
    const auto f = p("(a -> b) <-> !c");
    CHECK(rename(f, std::map<Var, Var>{}) == f);
    CHECK(rename(f, [](const Var& x) { return x; }) == f);
    CHECK_THROWS_AS(rename(p("a | b"), std::map<Var, Var>{{Var("a"), Var("b")}}), std::invalid_argument);
    CHECK_THROWS_AS(rename(p("a | b"), std::map<Var, Var>{{Var("a"), Var("c")}, {Var("b"), Var("c")}}),
                    std::invalid_argument);
    // Swapping is injective and allowed.
    CHECK(rename(p("a & !b"), std::map<Var, Var>{{Var("a"), Var("b")}, {Var("b"), Var("a")}}) == p("b & !a"));
}

TEST_CASE("renaming commutes with evaluation")
{
    oracle::Generator gen(13);
    const auto xs = oracle::make_vars(3, "x");
    const auto ys = oracle::make_vars(3, "y");
    std::map<Var, Var> mapping;
    for (std::size_t k = 0; k < 3; ++k)
        mapping.emplace(xs[k], ys[k]);
    for (int k = 0; k < 500; ++k) {
        const auto f = gen.formula(xs, 3);
        const auto g = rename(f, mapping);
        for (oracle::Bits m = 0; m < 8; ++m)
            REQUIRE(oracle::eval_bits(g, ys, m) == oracle::eval_bits(f, xs, m));
    }
}

TEST_CASE("node builders and constant simplification")
{
    CHECK_THROWS_AS(make_and({v("a")}), std::invalid_argument);
    CHECK_THROWS_AS(make_or({}), std::invalid_argument);
    CHECK(conjoin({}) == Formula::constant(true));
    CHECK(disjoin({}) == Formula::constant(false));
    CHECK(conjoin({v("a")}) == v("a"));
    CHECK(disjoin({v("a"), v("b")}) == p("a | b"));

    CHECK(simplify_constants(p("true & a")) == v("a"));
    CHECK(simplify_constants(p("false & a")) == Formula::constant(false));
    CHECK(simplify_constants(p("a | true")) == Formula::constant(true));
    CHECK(simplify_constants(p("false -> a")) == Formula::constant(true));
    CHECK(simplify_constants(p("a <-> false")) == make_not(v("a")));
    CHECK(simplify_constants(p("!true | b")) == v("b"));

    oracle::Generator gen(14);
    const auto vars = oracle::make_vars(2);
    for (int k = 0; k < 2000; ++k) {
        const auto f = gen.formula(vars, 3);
        const auto g = simplify_constants(f);
        if (!g.is_constant())
            REQUIRE((to_string(g).find("true") == std::string::npos && to_string(g).find("false") == std::string::npos));
        for (oracle::Bits m = 0; m < 4; ++m)
            REQUIRE(oracle::eval_bits(g, vars, m) == oracle::eval_bits(f, vars, m));
    }
}
