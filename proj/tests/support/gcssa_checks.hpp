#pragma once

#include "homog/checker.hpp"
#include "homog/gcssa.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace gcssa_checks {

struct Instance {
    homog::Family family;
    homog::CoverSet cover;
    std::optional<homog::Colour> gamma0;
};

/// Violations of the run invariants; empty when the run is sound.
inline std::vector<std::string> outcome_violations(const homog::GcssaOutcome& out, const homog::CoverSet& b0,
                                                   const homog::Family& f) {
    using namespace homog;
    std::vector<std::string> bad;
    const int m = f.part_count();
    const auto& tr = out.trace;
    if (out.kind == GcssaKind::stalled) bad.push_back("stalled: " + out.note);
    if (tr.empty()) {
        bad.push_back("empty trace");
        return bad;
    }
    if (!(tr.front().cover == b0)) bad.push_back("trace does not start at b0");
    if (tr.size() > f.size() + b0.by_colour.size() + 1) bad.push_back("too many steps");
    std::set<Monic> tested;
    for (std::size_t s = 0; s < tr.size(); ++s) {
        const auto& st = tr[s];
        if (!tested.insert(st.cover.member(st.gamma)).second) bad.push_back("monic tested twice");
        if (!std::binary_search(st.delta.begin(), st.delta.end(), st.gamma)) bad.push_back("gamma outside delta");
        if (!quasi_order(st.cover).maximal[st.gamma]) bad.push_back("test monic not maximal");
        if (!in_lambda(st.cover, f)) bad.push_back("cover left Lambda");
        if (s + 1 == tr.size()) break;
        const auto& nx = tr[s + 1];
        if (!std::includes(st.delta.begin(), st.delta.end(), nx.delta.begin(), nx.delta.end()) ||
            st.delta.size() > nx.delta.size() + 1)
            bad.push_back("delta not shrinking by at most one");
        for (std::size_t c = 0; c < st.cover.by_colour.size(); ++c)
            if ((c == st.gamma) == (st.cover.by_colour[c] == nx.cover.by_colour[c]))
                bad.push_back("step changed a member other than the test slot");
        if (!precedes(nx.cover, st.cover)) bad.push_back("step broke the precedence order");
        else if (!based_on(nx.cover, st.cover, m)) bad.push_back("precedence without omega inclusion");
    }
    if (out.kind == GcssaKind::good) {
        if (!out.key || !is_key_colour(out.cover, f, *out.key)) bad.push_back("good outcome without key colour");
        else if (!quasi_order(out.cover).maximal[*out.key]) bad.push_back("key monic not maximal");
        if (!(out.cover == tr.back().cover)) bad.push_back("good cover differs from last state");
    }
    if (out.kind == GcssaKind::reduced) {
        if (quasi_order(out.cover).t != quasi_order(b0).t - 1) bad.push_back("reduced without t dropping by one");
        if (!precedes(out.cover, b0)) bad.push_back("reduced cover does not precede b0");
        if (!based_on(out.cover, b0, m)) bad.push_back("reduced cover not based on b0");
    }
    return bad;
}

/// Every subset of `extra` added to `base`, kept when the result passes.
inline std::vector<homog::Family> passing_supersets(const homog::Family& base, const std::vector<homog::Monic>& extra) {
    std::vector<homog::Family> out;
    for (unsigned mask = 0; mask < (1u << extra.size()); ++mask) {
        homog::Family f = base;
        for (std::size_t b = 0; b < extra.size(); ++b)
            if (mask >> b & 1) f = f.with(extra[b]);
        if (homog::classify(f).passed()) out.push_back(f);
    }
    return out;
}

/// All Lambda sets of f on every pair, paired with each maximal gamma0.
inline void add_instances(const homog::Family& f, std::vector<Instance>& out, std::size_t per_family = 1u << 20) {
    using namespace homog;
    std::size_t added = 0;
    for (int i = 0; i < f.part_count(); ++i)
        for (int j = i + 1; j < f.part_count(); ++j) {
            auto st = enumerate_cover_sets(f, i, j);
            while (auto b = st.next()) {
                auto q = quasi_order(*b);
                for (std::size_t c = 0; c < q.maximal.size(); ++c)
                    if (q.maximal[c]) {
                        if (added++ >= per_family) return;
                        out.push_back({f, *b, Colour(c)});
                    }
            }
        }
}

/// Random passing families: a colour-isomorphic image of one of `bases`
/// grown by random monics while it stays valid and passing.
inline std::vector<homog::Family> random_passing(const std::vector<homog::Family>& bases, int want,
                                                 std::mt19937_64& rng, int additions = 6) {
    using namespace homog;
    std::vector<Family> out;
    for (int t = 0; t < want; ++t) {
        const Family& base = bases[rng() % bases.size()];
        const auto& lang = base.language_ptr();
        const int m = lang->parts();
        Family f = apply(random_colour_isomorphism(*lang, rng), base);
        for (int a = 0; a < additions; ++a) {
            std::vector<int> parts;
            const int size = 3 + static_cast<int>(rng() % std::min(2, m - 2));
            while (static_cast<int>(parts.size()) < size) {
                int p = static_cast<int>(rng() % m);
                if (std::find(parts.begin(), parts.end(), p) == parts.end()) parts.push_back(p);
            }
            std::sort(parts.begin(), parts.end());
            std::vector<Colour> cols;
            for (std::size_t x = 0; x < parts.size(); ++x)
                for (std::size_t y = x + 1; y < parts.size(); ++y)
                    cols.push_back(Colour(rng() % lang->colour_count(parts[x], parts[y])));
            Family g = f.with(Monic(m, parts, cols));
            if (validate_family(g).ok() && classify(g).passed()) f = g;
        }
        out.push_back(f);
    }
    return out;
}

}  // namespace gcssa_checks
