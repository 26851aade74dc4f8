#include "doctest.h"
#include "fixtures.hpp"

#include "homog/canon.hpp"
#include "homog/embed.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace homog;

namespace {

Graph random_graph(const Language& lang, int n, std::mt19937_64& rng) {
    const int m = lang.parts();
    GraphBuilder b(m);
    std::vector<int> parts;
    for (int v = 0; v < n; ++v) parts.push_back(static_cast<int>(rng() % m));
    for (int p : parts) b.add_vertex(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (parts[u] != parts[v])
                b.set_colour(u, v, static_cast<Colour>(rng() % lang.colour_count(parts[u], parts[v])));
    return b.build();
}

/// Reference: colour-isomorphic iff some theta/sigma image embeds both ways
/// with equal sizes. Exhaustive over all sigma.
bool colour_isomorphic_naive(const Graph& a, const Graph& b, const Language& lang) {
    if (a.size() != b.size()) return false;
    const int m = lang.parts();
    for (const auto& theta : profile_preserving_permutations(lang)) {
        std::vector<std::vector<Colour>> sigma(lang.pair_count());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                sigma[lang.pair_index(i, j)].resize(lang.colour_count(i, j));
                std::iota(sigma[lang.pair_index(i, j)].begin(), sigma[lang.pair_index(i, j)].end(), 0);
            }
        while (true) {
            ColourIsomorphism iso{theta, sigma};
            Graph img = apply(iso, a);
            if (embeds(img, b)) return true;
            int p = 0;
            for (; p < lang.pair_count(); ++p)
                if (std::next_permutation(sigma[p].begin(), sigma[p].end())) break;
            if (p == lang.pair_count()) break;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("canonical form is deterministic and separates sizes") {
    auto lang = fixtures::language("m3c3");
    Monic a = fixtures::monic(*lang, "[012; a b c]");
    CHECK(canonical_form(a, *lang) == canonical_form(a, *lang));
    Monic e = fixtures::monic(*lang, "[01; a]");
    CHECK(canonical_form(a, *lang) != canonical_form(e, *lang));
}

TEST_CASE("[012; a b c] and [012; a c b] are colour-isomorphic") {
    auto lang = fixtures::language("m3c3");
    Monic a = fixtures::monic(*lang, "[012; a b c]");
    Monic b = fixtures::monic(*lang, "[012; a c b]");
    CHECK(canonical_form(a, *lang) == canonical_form(b, *lang));
    CHECK(colour_isomorphic_naive(a.to_graph(), b.to_graph(), *lang));
    CHECK(canonical_form(a, *lang, Equivalence::parts_fixed) !=
          canonical_form(b, *lang, Equivalence::parts_fixed));
}

TEST_CASE("canonical form is invariant under random colour isomorphisms") {
    for (const char* name : {"m3c2", "m3c3", "m4c3"}) {
        auto lang = fixtures::language(name);
        std::mt19937_64 rng(5);
        for (int t = 0; t < 60; ++t) {
            Graph g = random_graph(*lang, 2 + static_cast<int>(rng() % 5), rng);
            auto iso = random_colour_isomorphism(*lang, rng);
            REQUIRE(is_colour_isomorphism(iso, *lang));
            std::vector<int> perm(g.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            Graph h = permute_vertices(apply(iso, g), perm);
            CAPTURE(name);
            CHECK(canonical_form(g, *lang) == canonical_form(h, *lang));
            Graph k = permute_vertices(g, perm);
            CHECK(canonical_form(g, *lang, Equivalence::parts_fixed) ==
                  canonical_form(k, *lang, Equivalence::parts_fixed));
        }
    }
}

TEST_CASE("equal canonical forms exactly when colour-isomorphic") {
    auto lang = fixtures::language("m3c2");
    std::mt19937_64 rng(9);
    int equal = 0;
    for (int t = 0; t < 250; ++t) {
        int n = 2 + static_cast<int>(rng() % 3);
        Graph a = random_graph(*lang, n, rng);
        Graph b = random_graph(*lang, n, rng);
        bool same = canonical_form(a, *lang) == canonical_form(b, *lang);
        equal += same;
        CHECK(same == colour_isomorphic_naive(a, b, *lang));
        bool fixed = canonical_form(a, *lang, Equivalence::parts_fixed) ==
                     canonical_form(b, *lang, Equivalence::parts_fixed);
        CHECK(fixed == (embeds(a, b) && a.size() == b.size()));
    }
    CHECK(equal > 0);
}

TEST_CASE("profile-preserving permutations respect colour counts") {
    LanguageDescription d;
    d.parts = 3;
    d.colours[{0, 1}] = {"a", "b"};
    d.colours[{0, 2}] = {"a", "b"};
    d.colours[{1, 2}] = {"a", "b", "c"};
    Language lang(d);
    auto perms = profile_preserving_permutations(lang);
    CHECK(perms.size() == 2);
    for (const auto& p : perms) CHECK(p[0] == 0);
}
