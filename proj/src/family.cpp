#include "homog/family.hpp"

#include "homog/embed.hpp"

#include <algorithm>
#include <stdexcept>

namespace homog {

Family::Family(std::shared_ptr<const Language> lang, std::vector<Monic> members)
    : lang_(std::move(lang)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
}

Family::Family(const Language& lang, std::vector<Monic> members)
    : Family(std::make_shared<const Language>(lang), std::move(members)) {}

bool Family::contains(const Monic& a) const {
    return std::binary_search(members_.begin(), members_.end(), a);
}

Family Family::with(const Monic& a) const {
    auto ms = members_;
    ms.push_back(a);
    return Family(lang_, std::move(ms));
}

Family Family::without(const Monic& a) const {
    auto ms = members_;
    ms.erase(std::remove(ms.begin(), ms.end(), a), ms.end());
    return Family(lang_, std::move(ms));
}

std::vector<Monic> Family::members_on(int i, int j) const {
    std::vector<Monic> out;
    for (const auto& a : members_)
        if (a.defined_on(i, j)) out.push_back(a);
    return out;
}

ValidationReport validate_family(const Family& f) {
    ValidationReport report;
    const auto& lang = f.language();
    const auto& ms = f.members();
    bool ranges_ok = true;
    for (const auto& a : ms) {
        auto r = validate_monic(a, lang);
        for (auto& v : r.violations) {
            report.add("member " + (a.part_count() == lang.parts() ? format_monic(a, lang) : "?") +
                       ": " + v);
            ranges_ok = false;
        }
    }
    if (!ranges_ok) return report;
    for (const auto& a : ms)
        if (a.size() < 3)
            report.add("member " + format_monic(a, lang) + " is defined on " +
                       std::to_string(a.size()) + " parts (needs at least 3)");
    for (std::size_t x = 0; x < ms.size(); ++x) {
        for (std::size_t y = x + 1; y < ms.size(); ++y) {
            if (ms[x] == ms[y]) {
                report.add("duplicate member " + format_monic(ms[x], lang));
            } else if (ms[x].embeds_in(ms[y])) {
                report.add("embeddable pair: " + format_monic(ms[x], lang) + " embeds in " +
                           format_monic(ms[y], lang));
            } else if (ms[y].embeds_in(ms[x])) {
                report.add("embeddable pair: " + format_monic(ms[y], lang) + " embeds in " +
                           format_monic(ms[x], lang));
            }
        }
    }
    return report;
}

ValidationReport validate_family(const Language& lang, const std::vector<Graph>& members) {
    ValidationReport report;
    std::vector<Monic> monics;
    for (std::size_t k = 0; k < members.size(); ++k) {
        auto gr = validate_graph(members[k], lang);
        for (auto& v : gr.violations) report.add("member #" + std::to_string(k) + ": " + v);
        if (!gr.ok()) continue;
        try {
            monics.push_back(Monic::from_graph(members[k]));
        } catch (const std::invalid_argument& e) {
            report.add("member #" + std::to_string(k) + " is not monic: " + e.what());
        }
    }
    auto rest = validate_family(Family(lang, std::move(monics)));
    for (auto& v : rest.violations) report.add(std::move(v));
    return report;
}

bool is_free(const Graph& h, const Family& f) {
    for (const auto& a : f.members())
        if (embeds(a, h)) return false;
    return true;
}

bool is_free(const Monic& h, const Family& f) {
    for (const auto& a : f.members())
        if (a.embeds_in(h)) return false;
    return true;
}

bool minimally_omitted(const Graph& h, const Family& f) {
    if (is_free(h, f)) return false;
    std::vector<int> keep;
    for (int drop = 0; drop < h.size(); ++drop) {
        keep.clear();
        for (int v = 0; v < h.size(); ++v)
            if (v != drop) keep.push_back(v);
        if (!is_free(h.induced(keep), f)) return false;
    }
    return true;
}

bool realized_by_monic_criterion(const Graph& h, const Family& f) {
    for (const auto& sel : monic_subgraphs(h))
        if (!is_free(sel.monic, f)) return false;
    return true;
}

namespace {

void encode_member(const Monic& a, std::vector<std::uint8_t>& out) {
    auto ps = a.parts();
    out.push_back(static_cast<std::uint8_t>(ps.size()));
    for (int p : ps) out.push_back(static_cast<std::uint8_t>(p));
    for (Colour c : a.colours()) out.push_back(c);
}

constexpr long long kTransformBudget = 50'000'000;

/// Members as 4-bit-per-pair words, most significant pair first.
CanonicalForm packed_family_form(const Family& f, const std::vector<std::vector<int>>& thetas) {
    const auto& lang = f.language();
    const int m = lang.parts();
    const int pairs = lang.pair_count();
    struct Edge {
        int pair;
        Colour colour;
        int i, j;
    };
    std::vector<std::vector<Edge>> edges;
    for (const auto& a : f.members()) {
        edges.emplace_back();
        auto ps = a.parts();
        for (std::size_t x = 0; x < ps.size(); ++x)
            for (std::size_t y = x + 1; y < ps.size(); ++y)
                edges.back().push_back({lang.pair_index(ps[x], ps[y]), a.colour(ps[x], ps[y]), ps[x], ps[y]});
    }
    std::vector<std::vector<Colour>> sigma(pairs);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto& s = sigma[lang.pair_index(i, j)];
            s.resize(lang.colour_count(i, j));
            for (std::size_t c = 0; c < s.size(); ++c) s[c] = static_cast<Colour>(c);
        }
    std::vector<std::uint64_t> best, keys(f.size());
    std::vector<std::vector<int>> shift(f.size());
    for (const auto& theta : thetas) {
        for (std::size_t k = 0; k < edges.size(); ++k) {
            shift[k].clear();
            for (const auto& e : edges[k])
                shift[k].push_back(4 * (pairs - 1 - lang.pair_index(theta[e.i], theta[e.j])));
        }
        for (auto& s : sigma) std::sort(s.begin(), s.end());
        while (true) {
            for (std::size_t k = 0; k < edges.size(); ++k) {
                std::uint64_t key = 0;
                for (std::size_t e = 0; e < edges[k].size(); ++e)
                    key |= std::uint64_t(sigma[edges[k][e].pair][edges[k][e].colour] + 1) << shift[k][e];
                keys[k] = key;
            }
            std::sort(keys.begin(), keys.end());
            if (best.empty() || keys < best) best = keys;
            int s = 0;
            while (s < pairs && !std::next_permutation(sigma[s].begin(), sigma[s].end())) ++s;
            if (s == pairs) break;
        }
    }
    std::vector<std::uint8_t> out{static_cast<std::uint8_t>(m), 1};
    for (auto key : best)
        for (int b = 7; b >= 0; --b) out.push_back(static_cast<std::uint8_t>(key >> (8 * b)));
    return CanonicalForm{out};
}

}  // namespace

CanonicalForm family_canonical_form(const Family& f) {
    const auto& lang = f.language();
    const int pairs = lang.pair_count();
    auto thetas = profile_preserving_permutations(lang);
    long long per_theta = 1;
    for (int s = 0; s < pairs; ++s) {
        int n = 0;
        for (int i = 0; i < lang.parts(); ++i)
            for (int j = i + 1; j < lang.parts(); ++j)
                if (lang.pair_index(i, j) == s) n = lang.colour_count(i, j);
        for (int k = 2; k <= n; ++k) per_theta *= k;
        if (per_theta * static_cast<long long>(thetas.size()) *
                std::max<long long>(1, static_cast<long long>(f.size())) >
            kTransformBudget)
            throw std::length_error("family canonical form: too many colour relabellings");
    }
    if (pairs <= 16 && lang.max_colours() <= 15) return packed_family_form(f, thetas);
    std::vector<std::uint8_t> best;
    bool have = false;
    ColourIsomorphism iso = identity_isomorphism(lang);
    std::vector<std::vector<std::uint8_t>> keys;
    for (const auto& theta : thetas) {
        iso.theta = theta;
        for (auto& s : iso.sigma) std::sort(s.begin(), s.end());
        while (true) {
            keys.clear();
            for (const auto& a : f.members()) {
                keys.emplace_back();
                encode_member(apply(iso, a), keys.back());
            }
            std::sort(keys.begin(), keys.end());
            std::vector<std::uint8_t> enc{static_cast<std::uint8_t>(lang.parts())};
            for (const auto& k : keys) enc.insert(enc.end(), k.begin(), k.end());
            if (!have || enc < best) {
                best = std::move(enc);
                have = true;
            }
            int s = 0;
            while (s < pairs && !std::next_permutation(iso.sigma[s].begin(), iso.sigma[s].end()))
                ++s;
            if (s == pairs) break;
        }
    }
    return CanonicalForm{best};
}

Family apply(const ColourIsomorphism& iso, const Family& f) {
    std::vector<Monic> ms;
    for (const auto& a : f.members()) ms.push_back(apply(iso, a));
    return Family(f.language_ptr(), std::move(ms));
}

}  // namespace homog
