#include "homog/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace homog {

namespace {

bool comparable(const Monic& a, const Monic& b) { return a.embeds_in(b) || b.embeds_in(a); }

/// Runs body(k) for k in [0, n) on up to `threads` workers.
template <class Body>
void parallel_for(std::size_t n, int threads, Body body) {
    const std::size_t w = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
    if (w == 1) {
        for (std::size_t k = 0; k < n; ++k) body(k);
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < w; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t k = t; k < n; k += w) body(k);
        });
    for (auto& th : pool) th.join();
}

int max_slot(const Monic& a) {
    auto ps = a.parts();
    const int n = static_cast<int>(ps.size());
    return pair_slot(a.part_count(), ps[n - 2], ps[n - 1]);
}

}  // namespace

std::vector<Monic> monic_pool(const Language& lang, bool triangles_only) {
    const int m = lang.parts();
    std::vector<Monic> out;
    for (PartMask mask = 0; mask < (PartMask(1) << m); ++mask) {
        const int size = popcount(mask);
        if (size < 3 || (triangles_only && size != 3)) continue;
        auto ps = mask_parts(mask);
        std::vector<std::pair<int, int>> prs;
        for (std::size_t x = 0; x < ps.size(); ++x)
            for (std::size_t y = x + 1; y < ps.size(); ++y) prs.emplace_back(ps[x], ps[y]);
        std::vector<Colour> cols(prs.size(), 0);
        while (true) {
            out.emplace_back(m, ps, cols);
            std::size_t k = 0;
            for (; k < cols.size(); ++k) {
                if (++cols[k] < lang.colour_count(prs[k].first, prs[k].second)) break;
                cols[k] = 0;
            }
            if (k == cols.size()) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monic> valid_extensions(const Family& f, bool triangles_only) {
    std::vector<Monic> out;
    for (const Monic& a : monic_pool(f.language(), triangles_only)) {
        if (f.contains(a)) continue;
        bool ok = true;
        for (const Monic& b : f.members())
            if (comparable(a, b)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(a);
    }
    return out;
}

std::vector<ColourIsomorphism> family_automorphisms(const Family& f) {
    const auto& lang = f.language();
    const int m = lang.parts();
    const int pairs = m * (m - 1) / 2;
    std::vector<std::vector<const Monic*>> closing(pairs);
    for (const Monic& a : f.members()) closing[max_slot(a)].push_back(&a);
    std::vector<ColourIsomorphism> out;
    ColourIsomorphism iso = identity_isomorphism(lang);
    for (const auto& theta : profile_preserving_permutations(lang)) {
        iso.theta = theta;
        auto rec = [&](auto&& self, int s) -> void {
            if (s == pairs) {
                out.push_back(iso);
                return;
            }
            auto& sig = iso.sigma[s];
            std::sort(sig.begin(), sig.end());
            do {
                bool ok = true;
                for (const Monic* a : closing[s])
                    if (!f.contains(apply(iso, *a))) {
                        ok = false;
                        break;
                    }
                if (ok) self(self, s + 1);
            } while (std::next_permutation(sig.begin(), sig.end()));
        };
        rec(rec, 0);
    }
    return out;
}

ExtensionClasses extension_classes(const Family& f, bool triangles_only) {
    ExtensionClasses out;
    auto ext = valid_extensions(f, triangles_only);
    out.valid_extensions = ext.size();
    auto autos = family_automorphisms(f);
    std::vector<ExtensionClass> orbits;
    std::vector<char> seen(ext.size(), 0);
    for (std::size_t k = 0; k < ext.size(); ++k) {
        if (seen[k]) continue;
        std::size_t size = 0;
        for (const auto& iso : autos) {
            auto it = std::lower_bound(ext.begin(), ext.end(), apply(iso, ext[k]));
            const auto idx = static_cast<std::size_t>(it - ext.begin());
            if (!seen[idx]) {
                seen[idx] = 1;
                ++size;
            }
        }
        orbits.push_back({ext[k], f.with(ext[k]), size});
    }
    std::map<CanonicalForm, std::size_t> by_form;
    try {
        std::vector<CanonicalForm> forms(orbits.size());
        for (std::size_t k = 0; k < orbits.size(); ++k) forms[k] = family_canonical_form(orbits[k].family);
        for (std::size_t k = 0; k < orbits.size(); ++k) {
            auto [it, fresh] = by_form.emplace(forms[k], out.classes.size());
            if (fresh) out.classes.push_back(orbits[k]);
            else out.classes[it->second].orbit += orbits[k].orbit;
        }
    } catch (const std::length_error&) {
        out.classes = std::move(orbits);
        out.merged_by_canonical_form = false;
    }
    return out;
}

std::optional<Monic> passing_extension(const Family& f, bool triangles_only) {
    for (const Monic& a : valid_extensions(f, triangles_only))
        if (classify(f.with(a)).passed()) return a;
    return std::nullopt;
}

bool is_maximal(const Family& f, bool triangles_only) { return !passing_extension(f, triangles_only); }

Census enumerate_valid_families(const Language& lang, const EnumerateOptions& opts,
                                const std::function<void(const EnumeratedFamily&)>& sink) {
    if (lang.parts() < 3) throw std::invalid_argument("enumerate: language needs at least three parts");
    const auto shared = std::make_shared<const Language>(lang);
    const auto pool = monic_pool(lang, opts.triangles_only);
    Census census;

    std::vector<Family> level{Family(shared, {})};
    std::vector<CanonicalForm> forms{family_canonical_form(level.front())};
    for (int size = 0;; ++size) {
        // classify and (optionally) test maximality of this level
        std::vector<EnumeratedFamily> rows;
        for (std::size_t k = 0; k < level.size(); ++k) rows.push_back({level[k], forms[k], {}, {}, false});
        parallel_for(level.size(), opts.threads, [&](std::size_t k) {
            auto& r = rows[k];
            r.verdict = classify(level[k]);
            if (r.verdict.passed() && opts.maximal_only) {
                r.maximality_tested = true;
                r.passing_extension = passing_extension(level[k], opts.triangles_only);
            }
        });
        census.classes_examined += level.size();
        for (auto& r : rows) {
            if (!r.verdict.passed()) {
                ++census.failing;
                continue;
            }
            if (r.passing_extension) {
                census.pruned.push_back(std::move(r));
                continue;
            }
            if (sink) sink(r);
            census.families.push_back(std::move(r));
        }
        census.complete_levels = size + 1;
        if (opts.max_members > 0 && size >= opts.max_members) break;

        // next level: one pool monic added to each class, merged by form
        std::vector<std::vector<std::size_t>> cand(level.size());
        std::uint64_t total = 0;
        for (std::size_t k = 0; k < level.size(); ++k) {
            const Family& f = level[k];
            for (std::size_t a = 0; a < pool.size(); ++a) {
                if (f.contains(pool[a])) continue;
                if (std::none_of(f.members().begin(), f.members().end(),
                                 [&](const Monic& b) { return comparable(pool[a], b); }))
                    cand[k].push_back(a);
            }
            total += cand[k].size();
        }
        if (total == 0) break;
        if (census.candidates + total > opts.budget) {
            census.partial = true;
            census.partial_reason = "budget reached before families of size " + std::to_string(size + 1);
            return census;
        }
        census.candidates += total;
        std::vector<std::map<CanonicalForm, Family>> found(level.size());
        parallel_for(level.size(), opts.threads, [&](std::size_t k) {
            for (std::size_t a : cand[k]) {
                Family g = level[k].with(pool[a]);
                auto form = family_canonical_form(g);
                found[k].emplace(std::move(form), std::move(g));
            }
        });
        std::map<CanonicalForm, Family> merged;
        for (auto& part : found) merged.merge(part);
        level.clear();
        forms.clear();
        for (auto& [form, g] : merged) {
            forms.push_back(form);
            level.push_back(std::move(g));
        }
    }
    return census;
}

}  // namespace homog
