#include "lexirev/errors.hpp"
#include "lexirev/model.hpp"

#include <doctest.h>

#include <set>

using namespace lexirev;

TEST_CASE("alphabets are ordered and duplicate-free")
{
    const Alphabet ab({Var("a"), Var("b")});
    CHECK(ab.size() == 2);
    CHECK(ab.index_of(Var("b")) == 1);
    CHECK_FALSE(ab.index_of(Var("c")));
    CHECK_THROWS_AS(Alphabet({Var("a"), Var("a")}), std::invalid_argument);
    CHECK(ab.with(Var("a")) == ab);
    CHECK(ab.with(Var("c")).vars().back() == Var("c"));

    const auto u = unite(Alphabet({Var("b"), Var("c")}), ab);
    REQUIRE(u.size() == 3);
    CHECK(u[0] == Var("b"));
    CHECK(u[1] == Var("c"));
    CHECK(u[2] == Var("a"));
}

TEST_CASE("models assign exactly their alphabet")
{
    const auto m = Model::of({{"a", true}, {"b", false}});
    CHECK(m.value(Var("a")));
    CHECK_FALSE(m.value(Var("b")));
    CHECK_THROWS_AS(m.value(Var("c")), UnboundVariable);
    CHECK_FALSE(m.find(Var("c")));
    CHECK(m == Model::of({{"a", true}, {"b", false}}));
    CHECK_FALSE(m == Model::of({{"b", false}, {"a", true}}));
    CHECK_THROWS_AS(Model(std::make_shared<const Alphabet>(std::vector<Var>{Var("a")}), {true, false}),
                    std::invalid_argument);
}

TEST_CASE("enumeration by binary counting, first variable most significant")
{
    const Alphabet a({Var("a")});
    auto one = enumerate_models(a);
    std::vector<Model> models(one.begin(), one.end());
    REQUIRE(models.size() == 2);
    CHECK(models[0] == Model::of({{"a", false}}));
    CHECK(models[1] == Model::of({{"a", true}}));

    const Alphabet abc({Var("a"), Var("b"), Var("c")});
    auto all = enumerate_models(abc);
    CHECK(all.count() == 8);
    std::set<std::vector<bool>> seen;
    for (const auto& m : all)
        seen.insert(m.values());
    CHECK(seen.size() == 8);
    CHECK(all.at(0) == Model::of({{"a", false}, {"b", false}, {"c", false}}));
    CHECK(all.at(4) == Model::of({{"a", true}, {"b", false}, {"c", false}}));
    CHECK(all.at(1) == Model::of({{"a", false}, {"b", false}, {"c", true}}));

    auto none = enumerate_models(Alphabet{});
    CHECK(none.count() == 1);
}

TEST_CASE("enumeration cap")
{
    std::vector<Var> vars;
    for (int k = 0; k < 21; ++k)
        vars.emplace_back("v" + std::to_string(k));
    CHECK_THROWS_AS(enumerate_models(Alphabet(vars)), CapExceeded);
    vars.pop_back();
    CHECK(enumerate_models(Alphabet(vars)).count() == (1U << 20));
    CHECK_THROWS_AS(enumerate_models(Alphabet(vars), 19), CapExceeded);
}
