#include "doctest.h"
#include "fixtures.hpp"

#include "homog/checker.hpp"
#include "homog/embed.hpp"
#include "homog/oracle.hpp"

#include <random>

using namespace homog;

namespace {

/// Reference two-point check: every free base on at most `max_base`
/// vertices over all parts, every pair of free extensions, every colour.
bool naive_amalgamation(const Family& f, int max_base) {
    const auto& lang = f.language();
    const int m = lang.parts();
    std::vector<Graph> level{Graph(m)}, all{Graph(m)};
    for (int n = 1; n <= max_base; ++n) {
        std::vector<Graph> next;
        for (const Graph& g : level)
            for (int p = 0; p < m; ++p) {
                std::vector<int> others;
                for (int v = 0; v < g.size(); ++v)
                    if (g.part(v) != p) others.push_back(v);
                std::vector<int> d(others.size(), 0);
                while (true) {
                    std::vector<Colour> to(g.size(), kNoColour);
                    for (std::size_t k = 0; k < others.size(); ++k) to[others[k]] = Colour(d[k]);
                    Graph h = g.with_vertex(p, to);
                    if (is_free(h, f)) next.push_back(h);
                    std::size_t k = 0;
                    for (; k < others.size(); ++k) {
                        if (++d[k] < lang.colour_count(p, g.part(others[k]))) break;
                        d[k] = 0;
                    }
                    if (k == others.size()) break;
                }
            }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    for (const Graph& a : all) {
        std::vector<std::pair<int, std::vector<Colour>>> ext;
        for (int p = 0; p < m; ++p) {
            std::vector<int> others;
            for (int v = 0; v < a.size(); ++v)
                if (a.part(v) != p) others.push_back(v);
            std::vector<int> d(others.size(), 0);
            while (true) {
                std::vector<Colour> to(a.size(), kNoColour);
                for (std::size_t k = 0; k < others.size(); ++k) to[others[k]] = Colour(d[k]);
                if (is_free(a.with_vertex(p, to), f)) ext.emplace_back(p, to);
                std::size_t k = 0;
                for (; k < others.size(); ++k) {
                    if (++d[k] < lang.colour_count(p, a.part(others[k]))) break;
                    d[k] = 0;
                }
                if (k == others.size()) break;
            }
        }
        for (const auto& x : ext)
            for (const auto& y : ext) {
                if (x.first >= y.first) continue;
                Diagram dg{a, x.first, x.second, y.first, y.second};
                if (complete_edge(dg, f).kind == EdgeCompletion::Kind::blocked) return false;
            }
    }
    return true;
}

}  // namespace

TEST_CASE("complete_edge basics") {
    auto lang = fixtures::language("m4c3");
    Family empty(lang, {});
    Graph base = fixtures::monic(*lang, "[23; a]").to_graph();
    Diagram d{base, 0, {0, 0}, 1, {0, 0}};
    auto r = complete_edge(d, empty);
    CHECK(r.kind == EdgeCompletion::Kind::coloured);
    CHECK(r.colour == 0);
    Diagram same{base, 0, {0, 0}, 0, {1, 1}};
    CHECK(complete_edge(same, fixtures::family(lang, "f1")).kind == EdgeCompletion::Kind::no_edge_needed);
}

TEST_CASE("f1 without A4 has a replaying failing diagram on {v2, v3}") {
    auto lang = fixtures::language("m4c3");
    auto f = fixtures::family(lang, "f1_minus_a4");
    auto w = witness_search(f, 0, 1);
    REQUIRE(w);
    CHECK(replay(*w, f));
    const auto& d = w->diagram;
    REQUIRE(d.base.size() == 2);
    CHECK(d.base.part(0) == 2);
    CHECK(d.base.part(1) == 3);
    CHECK(d.base.colour(0, 1) == 0);
    auto c = complete_edge(d, f);
    CHECK(c.kind == EdgeCompletion::Kind::blocked);
    CHECK(c.blockers.size() == 3);

    for (int col = 1; col < 3; ++col) {
        Diagram alt = d;
        alt.base = d.base.recoloured(0, 1, Colour(col));
        CHECK_FALSE(is_free(alt.b2(), f));
    }

    auto v = bruteforce_check(f, {.max_base = 3});
    REQUIRE(v.status == OracleStatus::fail);
    REQUIRE(v.witness);
    CHECK(replay(*v.witness, f));
    CHECK(v.witness->diagram.base.size() <= 2);
}

TEST_CASE("f1 passes the oracle and has no witnesses") {
    auto lang = fixtures::language("m4c3");
    auto f = fixtures::family(lang, "f1");
    auto v = bruteforce_check(f, {.max_base = 5});
    CHECK(v.status == OracleStatus::pass);
    CHECK(v.completeness_bound == 12);
    CHECK(v.sufficient_bound == 6);
    CHECK_FALSE(v.complete);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK_FALSE(witness_search(f, i, j));
}

TEST_CASE("tripartite a-free family passes the oracle") {
    auto lang = fixtures::language("m3c3");
    auto v = bruteforce_check(fixtures::family(lang, "tri_a_free"), {.max_base = 4});
    CHECK(v.status == OracleStatus::pass);
    CHECK(v.complete);
    auto cover = fixtures::family(lang, "tri_cover");
    auto u = bruteforce_check(cover, {.max_base = 4});
    REQUIRE(u.status == OracleStatus::fail);
    CHECK(replay(*u.witness, cover));
}

TEST_CASE("witness_search needs a blocker for every colour") {
    auto lang = fixtures::language("m4c3");
    CHECK_FALSE(witness_search(fixtures::family(lang, "f1"), 0, 2));
    CHECK_FALSE(witness_search(Family(lang, {}), 0, 1));
}

TEST_CASE("budget exhaustion is inconclusive") {
    auto lang = fixtures::language("m4c3");
    auto v = bruteforce_check(fixtures::family(lang, "f1"), {.max_base = 4, .budget = 10});
    CHECK(v.status == OracleStatus::inconclusive);
    CHECK_FALSE(v.note.empty());
}

TEST_CASE("threaded and sequential runs agree") {
    auto lang = fixtures::language("m4c3");
    for (const char* name : {"f1", "f1_minus_a4", "f2_plus_one"}) {
        auto f = fixtures::family(lang, name);
        auto a = bruteforce_check(f, {.max_base = 3, .threads = 1});
        auto b = bruteforce_check(f, {.max_base = 3, .threads = 3});
        CHECK(a.status == b.status);
        if (a.witness && b.witness) CHECK(a.witness->diagram.base == b.witness->diagram.base);
    }
}

TEST_CASE("restricted bases agree with the naive all-parts search") {
    auto lang = fixtures::language("m3c2");
    std::vector<Monic> pool;
    for (int x = 0; x < 8; ++x) pool.emplace_back(3, std::vector<int>{0, 1, 2}, std::vector<Colour>{Colour(x & 1), Colour(x >> 1 & 1), Colour(x >> 2)});
    for (int mask = 0; mask < 256; mask += 3) {
        std::vector<Monic> ms;
        for (int b = 0; b < 8; ++b)
            if (mask >> b & 1) ms.push_back(pool[b]);
        Family f(lang, ms);
        CAPTURE(mask);
        CHECK((bruteforce_check(f, {.max_base = 3}).status == OracleStatus::pass) == naive_amalgamation(f, 3));
    }
    auto l4 = fixtures::language("m4c3");
    for (const char* name : {"f1", "f1_minus_a4"}) {
        auto f = fixtures::family(l4, name);
        CHECK((bruteforce_check(f, {.max_base = 2}).status == OracleStatus::pass) == naive_amalgamation(f, 2));
    }
}

TEST_CASE("witness implies oracle failure and agrees with classify") {
    auto lang = fixtures::language("m4c3");
    std::mt19937_64 rng(21);
    std::vector<Monic> tri;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c)
                for (int x = 0; x < 27; ++x)
                    tri.emplace_back(4, std::vector<int>{a, b, c}, std::vector<Colour>{Colour(x % 3), Colour(x / 3 % 3), Colour(x / 9)});
    int fails = 0;
    for (int t = 0; t < 25; ++t) {
        std::vector<Monic> ms;
        for (const auto& m : tri)
            if (rng() % 12 == 0) ms.push_back(m);
        Family f(lang, ms);
        auto verdict = classify(f);
        auto o = bruteforce_check(f, {.max_base = 4});
        CHECK((verdict.status == Status::pass) == (o.status == OracleStatus::pass));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (auto w = witness_search(f, i, j)) {
                    CHECK(replay(*w, f));
                    CHECK(o.status == OracleStatus::fail);
                    ++fails;
                }
    }
    CHECK(fails > 0);
}
