#include "doctest.h"
#include "fixtures.hpp"

#include "homog/checker.hpp"

#include <random>

using namespace homog;

namespace {

std::string code_text(const Family& f, const Code& c) { return format_code(c, f.language()); }

}  // namespace

TEST_CASE("f1 passes with a single corresponding pair") {
    auto lang = fixtures::language("m4c3");
    auto f = fixtures::family(lang, "f1");
    auto v = classify(f);
    CHECK(v.status == Status::pass);
    REQUIRE(v.census.size() == 1);
    CHECK(code_text(f, v.census[0].code) == "(0,1,2,3; a,a,a,a)");
    CHECK(v.census[0].forward.members.size() == 3);
    CHECK(v.census[0].backward.members.size() == 3);
    CHECK(v.findings.empty());
    CHECK(check_quadripartite(f).status == Status::pass);
}

TEST_CASE("f1 without A4 fails correspondence on the aaaa code") {
    auto lang = fixtures::language("m4c3");
    auto f = fixtures::family(lang, "f1_minus_a4");
    for (auto v : {classify(f), check_quadripartite(f)}) {
        CHECK(v.status == Status::fail);
        CHECK(v.condition == Condition::correspondence);
        REQUIRE(v.code);
        CHECK(code_text(f, *v.code) == "(0,1,2,3; a,a,a,a)");
        REQUIRE(v.pair);
        CHECK(*v.pair == std::pair{0, 1});
    }
}

TEST_CASE("every subset of the f1 additions passes") {
    auto lang = fixtures::language("m4c3");
    auto base = fixtures::family(lang, "f1");
    auto all = fixtures::family(lang, "f1_plus_additions");
    std::vector<Monic> extra;
    for (const auto& a : all.members())
        if (!base.contains(a)) extra.push_back(a);
    REQUIRE(extra.size() == 3);
    for (int mask = 0; mask < 8; ++mask) {
        Family f = base;
        for (int b = 0; b < 3; ++b)
            if (mask >> b & 1) f = f.with(extra[b]);
        CAPTURE(mask);
        CHECK(classify(f).status == Status::pass);
        CHECK(check_quadripartite(f).status == Status::pass);
    }
}

TEST_CASE("f2 passes with three corresponding pairs") {
    auto lang = fixtures::language("m4c3");
    auto f = fixtures::family(lang, "f2");
    auto v = classify(f);
    REQUIRE(v.status == Status::pass);
    REQUIRE(v.census.size() == 3);
    std::set<std::string> codes;
    for (const auto& p : v.census) codes.insert(code_text(f, p.code));
    CHECK(codes == std::set<std::string>{"(0,1,2,3; a,a,a,a)", "(0,2,1,3; a,a,a,a)",
                                         "(0,3,1,2; a,a,a,a)"});
}

TEST_CASE("f2 plus a triangle fails") {
    auto lang = fixtures::language("m4c3");
    auto f = fixtures::family(lang, "f2_plus_one");
    REQUIRE(validate_family(f).ok());
    CHECK(classify(f).status == Status::fail);
    CHECK(check_quadripartite(f).status == Status::fail);
}

TEST_CASE("f3 passes with sixteen pairs and cover sets only on 01 and 23") {
    auto lang = fixtures::language("m4c3");
    auto f = fixtures::family(lang, "f3");
    auto v = classify(f);
    REQUIRE(v.status == Status::pass);
    CHECK(v.census.size() == 16);
    std::set<std::string> got, want;
    for (const auto& p : v.census) got.insert(code_text(f, p.code));
    for (const char* a : {"a", "c"})
        for (const char* b : {"a", "c"})
            for (const char* c : {"a", "c"})
                for (const char* d : {"a", "c"})
                    want.insert(std::string("(0,1,2,3; ") + a + "," + b + "," + c + "," + d + ")");
    CHECK(got == want);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            auto s = enumerate_cover_sets(f, i, j);
            bool expect = (i == 0 && j == 1) || (i == 2 && j == 3);
            CHECK(s.next().has_value() == expect);
        }
    CHECK(enumerate_cover_sets(f, 0, 1).total() == 128);
}

TEST_CASE("family without cover sets passes") {
    auto lang = fixtures::language("m4c3");
    auto f = fixtures::family(lang, "no_cover");
    CHECK(classify(f).status == Status::pass);
    CHECK(check_quadripartite(f).status == Status::pass);
}

TEST_CASE("tripartite decider") {
    auto lang = fixtures::language("m3c3");
    SUBCASE("a-free triangles and all their subsets pass") {
        auto f = fixtures::family(lang, "tri_a_free");
        REQUIRE(f.size() == 8);
        for (int mask = 0; mask < 256; ++mask) {
            std::vector<Monic> members;
            for (int b = 0; b < 8; ++b)
                if (mask >> b & 1) members.push_back(f.members()[b]);
            CHECK(classify(Family(lang, members)).status == Status::pass);
        }
    }
    SUBCASE("a fully covered pair fails with that pair") {
        auto v = classify(fixtures::family(lang, "tri_cover"));
        CHECK(v.status == Status::fail);
        CHECK(v.condition == Condition::tripartite_cover);
        REQUIRE(v.pair);
        CHECK(*v.pair == std::pair{0, 1});
        REQUIRE(v.cover);
        CHECK(v.cover->by_colour.size() == 3);
    }
    SUBCASE("empty family passes") { CHECK(classify(Family(lang, {})).status == Status::pass); }
    CHECK_THROWS_AS(check_tripartite(fixtures::family(fixtures::language("m4c3"), "f1")),
                    std::invalid_argument);
}

TEST_CASE("dispatch and validation") {
    auto m2 = fixtures::language("m2c3");
    CHECK(classify(Family(m2, {})).status == Status::pass);
    CHECK(classify(Family(m2, {})).decider == "bipartite");
    auto m3 = fixtures::language("m3c3");
    auto bad = fixtures::family(m3, "two_part");
    auto v = classify(bad);
    CHECK(v.status == Status::invalid);
    CHECK_FALSE(v.validation.ok());
    CHECK_THROWS_AS(check_quadripartite(fixtures::family(m3, "tri_a_free")), std::invalid_argument);
    CHECK_THROWS_AS(check_mgeneric(Family(m2, {})), std::invalid_argument);
}

TEST_CASE("f1 embedded in five parts passes") {
    auto lang4 = fixtures::language("m4c3");
    auto lang5 = fixtures::language("m5c3");
    auto f1 = fixtures::family(lang4, "f1");
    std::vector<Monic> lifted;
    for (const auto& a : f1.members()) lifted.emplace_back(5, a.parts(), a.colours());
    Family f(lang5, lifted);
    auto v = classify(f);
    CHECK(v.status == Status::pass);
    CHECK(v.census.size() == 1);
}

TEST_CASE("loose based-on form agrees on the shipped families") {
    auto lang = fixtures::language("m4c3");
    for (const char* name : {"f1", "f2", "f3", "f1_plus_additions"}) {
        auto f = fixtures::family(lang, name);
        auto v = classify(f, {.loose_based_on = true});
        CAPTURE(name);
        CHECK(v.status == Status::pass);
        CHECK(v.findings.empty());
    }
}

TEST_CASE("the two m=4 deciders agree on random families") {
    auto lang = fixtures::language("m4c3");
    std::mt19937_64 rng(7);
    std::vector<Monic> triangles;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c)
                for (int x = 0; x < 27; ++x)
                    triangles.emplace_back(4, std::vector<int>{a, b, c},
                                           std::vector<Colour>{Colour(x % 3), Colour(x / 3 % 3), Colour(x / 9)});
    int passes = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Monic> members;
        std::bernoulli_distribution keep(0.05 + 0.1 * (trial % 4));
        for (const auto& t : triangles)
            if (keep(rng)) members.push_back(t);
        Family f(lang, members);
        auto a = classify(f);
        auto b = check_quadripartite(f);
        CHECK(a.status == b.status);
        if (a.status == Status::pass) {
            ++passes;
            CHECK(a.census.size() == b.census.size());
            for (const auto& p : a.census) {
                CHECK_FALSE(agreeing_monic_violation(f, p.code));
            }
        }
    }
    CHECK(passes > 0);
}
