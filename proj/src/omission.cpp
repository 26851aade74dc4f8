#include "homog/omission.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace homog {

Code make_code(int i, int j, int k, int l, Colour c_ik, Colour c_il, Colour c_jk, Colour c_jl) {
    if (i == j || i == k || i == l || j == k || j == l || k == l)
        throw std::invalid_argument("code parts must be distinct");
    if (i > j) {
        std::swap(i, j);
        std::swap(c_ik, c_jk);
        std::swap(c_il, c_jl);
    }
    if (k > l) {
        std::swap(k, l);
        std::swap(c_ik, c_il);
        std::swap(c_jk, c_jl);
    }
    return Code{{i, j, k, l}, {c_ik, c_il, c_jk, c_jl}};
}

Code swapped(const Code& c) {
    return Code{{c.k(), c.l(), c.i(), c.j()}, {c.c_ik(), c.c_jk(), c.c_il(), c.c_jl()}};
}

ValidationReport validate_code(const Code& c, const Language& lang) {
    ValidationReport report;
    for (int p : c.parts)
        if (p < 0 || p >= lang.parts()) {
            report.add("code part " + std::to_string(p) + " out of range");
            return report;
        }
    if (c.i() >= c.j() || c.k() >= c.l() || c.i() == c.k() || c.i() == c.l() || c.j() == c.k() ||
        c.j() == c.l())
        report.add("code parts must be distinct with i<j and k<l");
    if (!report.ok()) return report;
    if (c.c_ik() >= lang.colour_count(c.i(), c.k())) report.add("c_ik not in its colour set");
    if (c.c_il() >= lang.colour_count(c.i(), c.l())) report.add("c_il not in its colour set");
    if (c.c_jk() >= lang.colour_count(c.j(), c.k())) report.add("c_jk not in its colour set");
    if (c.c_jl() >= lang.colour_count(c.j(), c.l())) report.add("c_jl not in its colour set");
    return report;
}

std::string format_code(const Code& c, const Language& lang) {
    auto name = [&](int a, int b, Colour col) -> std::string {
        return col < lang.colour_count(a, b) ? lang.colour_name(a, b, col) : "?";
    };
    return "(" + std::to_string(c.i()) + "," + std::to_string(c.j()) + "," +
           std::to_string(c.k()) + "," + std::to_string(c.l()) + "; " +
           name(c.i(), c.k(), c.c_ik()) + "," + name(c.i(), c.l(), c.c_il()) + "," +
           name(c.j(), c.k(), c.c_jk()) + "," + name(c.j(), c.l(), c.c_jl()) + ")";
}

Monic code_triangle(const Code& code, int third, Colour c, int part_count) {
    Colour ci, cj;
    if (third == code.k()) {
        ci = code.c_ik();
        cj = code.c_jk();
    } else if (third == code.l()) {
        ci = code.c_il();
        cj = code.c_jl();
    } else {
        throw std::invalid_argument("code_triangle: third part must be k or l");
    }
    const int i = code.i(), j = code.j();
    std::vector<int> parts{i, j, third};
    std::sort(parts.begin(), parts.end());
    std::vector<Colour> edges(static_cast<std::size_t>(part_count * (part_count - 1) / 2),
                              kNoColour);
    edges[pair_slot(part_count, i, j)] = c;
    edges[pair_slot(part_count, i, third)] = ci;
    edges[pair_slot(part_count, j, third)] = cj;
    std::vector<Colour> colours{edges[pair_slot(part_count, parts[0], parts[1])],
                                edges[pair_slot(part_count, parts[0], parts[2])],
                                edges[pair_slot(part_count, parts[1], parts[2])]};
    return Monic(part_count, parts, colours);
}

std::string format_cover_set(const CoverSet& a, const Language& lang) {
    std::string out = "{";
    for (std::size_t c = 0; c < a.by_colour.size(); ++c) {
        if (c) out += ", ";
        out += format_monic(a.by_colour[c], lang);
    }
    return out + "}";
}

std::vector<std::vector<Monic>> cover_candidates(const Family& f, int i, int j) {
    std::vector<std::vector<Monic>> out(static_cast<std::size_t>(f.language().colour_count(i, j)));
    for (const auto& a : f.members())
        if (a.defined_on(i, j)) out[a.colour(i, j)].push_back(a);
    return out;
}

CoverSetStream::CoverSetStream(int i, int j, std::vector<std::vector<Monic>> candidates)
    : i_(i), j_(j), candidates_(std::move(candidates)), digits_(candidates_.size(), 0) {
    total_ = 1;
    for (const auto& c : candidates_) {
        if (c.empty()) {
            done_ = true;
            total_ = 0;
            break;
        }
        if (total_ > std::numeric_limits<std::uint64_t>::max() / c.size())
            total_ = std::numeric_limits<std::uint64_t>::max();
        else
            total_ *= c.size();
    }
    if (candidates_.empty()) {
        done_ = true;
        total_ = 0;
    }
}

std::optional<CoverSet> CoverSetStream::next() {
    if (done_) return std::nullopt;
    CoverSet out{i_, j_, {}};
    for (std::size_t c = 0; c < candidates_.size(); ++c)
        out.by_colour.push_back(candidates_[c][digits_[c]]);
    std::size_t pos = candidates_.size();
    while (pos > 0) {
        --pos;
        if (++digits_[pos] < candidates_[pos].size()) break;
        digits_[pos] = 0;
        if (pos == 0) done_ = true;
    }
    return out;
}

CoverSetStream enumerate_cover_sets(const Family& f, int i, int j) {
    return CoverSetStream(i, j, cover_candidates(f, i, j));
}

std::set<Code> codes_based_on(const CoverSet& a, int m) {
    std::set<Code> out;
    const int i = a.i, j = a.j;
    for (int k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        for (int l = k + 1; l < m; ++l) {
            if (l == i || l == j) continue;
            for (const auto& x : a.by_colour) {
                if (!x.has(k)) continue;
                for (const auto& y : a.by_colour) {
                    if (!y.has(l)) continue;
                    out.insert(make_code(i, j, k, l, x.colour(i, k), y.colour(i, l),
                                         x.colour(j, k), y.colour(j, l)));
                }
            }
        }
    }
    return out;
}

std::optional<OmissionSet> omission_set_with_code(const Family& f, const Code& code) {
    const auto& lang = f.language();
    auto report = validate_code(code, lang);
    if (!report.ok()) throw std::invalid_argument("invalid code: " + report.violations.front());
    const int m = lang.parts();
    OmissionSet s{code, {}, false, false};
    for (int c = 0; c < lang.colour_count(code.i(), code.j()); ++c) {
        Monic tk = code_triangle(code, code.k(), static_cast<Colour>(c), m);
        Monic tl = code_triangle(code, code.l(), static_cast<Colour>(c), m);
        bool hk = f.contains(tk), hl = f.contains(tl);
        if (!hk && !hl) return std::nullopt;
        if (hk) {
            s.members.push_back(tk);
            s.has_k_type = true;
        }
        if (hl) {
            s.members.push_back(tl);
            s.has_l_type = true;
        }
    }
    std::sort(s.members.begin(), s.members.end());
    return s;
}

bool corresponding_exists(const Family& f, const OmissionSet& s) {
    auto other = omission_set_with_code(f, swapped(s.code));
    return other && other->both_types();
}

std::optional<BasedOnHit> based_on_triangles(const Family& f, const CoverSet& a) {
    const int i = a.i, j = a.j;
    for (const auto& x : a.by_colour) {
        if (x.size() != 3) continue;
        const int k = mask_parts(x.mask() & ~((PartMask{1} << i) | (PartMask{1} << j))).front();
        for (const auto& y : a.by_colour) {
            if (y.size() != 3 || y.has(k)) continue;
            const int l = mask_parts(y.mask() & ~((PartMask{1} << i) | (PartMask{1} << j))).front();
            Code code = make_code(i, j, k, l, x.colour(i, k), y.colour(i, l), x.colour(j, k),
                                  y.colour(j, l));
            auto s = omission_set_with_code(f, code);
            if (s && s->both_types()) {
                bool x_is_k = k < l;
                return BasedOnHit{code, *s, x_is_k ? x : y, x_is_k ? y : x};
            }
        }
    }
    return std::nullopt;
}

std::optional<BasedOnHit> based_on_codes(const Family& f, const CoverSet& a) {
    const int m = f.part_count();
    for (const auto& code : codes_based_on(a, m)) {
        auto s = omission_set_with_code(f, code);
        if (!s || !s->both_types()) continue;
        std::optional<Monic> ks, ls;
        for (const auto& x : a.by_colour) {
            if (!ks && x.has(code.k()) && x.colour(code.i(), code.k()) == code.c_ik() &&
                x.colour(code.j(), code.k()) == code.c_jk())
                ks = x;
            if (!ls && x.has(code.l()) && x.colour(code.i(), code.l()) == code.c_il() &&
                x.colour(code.j(), code.l()) == code.c_jl())
                ls = x;
        }
        return BasedOnHit{code, *s, *ks, *ls};
    }
    return std::nullopt;
}

std::optional<Monic> agreeing_monic_violation(const Family& f, const Code& code) {
    for (const auto& a : f.members()) {
        bool all = true;
        for (int p : code.parts) all = all && a.has(p);
        if (!all) continue;
        if (a.colour(code.i(), code.k()) == code.c_ik() &&
            a.colour(code.i(), code.l()) == code.c_il() &&
            a.colour(code.j(), code.k()) == code.c_jk() &&
            a.colour(code.j(), code.l()) == code.c_jl())
            return a;
    }
    return std::nullopt;
}

std::set<Code> candidate_codes(const Family& f) {
    std::vector<Monic> tri;
    for (const auto& a : f.members())
        if (a.size() == 3) tri.push_back(a);
    std::set<Code> out;
    for (const auto& x : tri)
        for (const auto& y : tri) {
            PartMask shared = x.mask() & y.mask();
            if (popcount(shared) != 2) continue;
            auto ij = mask_parts(shared);
            const int i = ij[0], j = ij[1];
            const int k = mask_parts(x.mask() & ~shared).front();
            const int l = mask_parts(y.mask() & ~shared).front();
            if (k > l) continue;
            out.insert(make_code(i, j, k, l, x.colour(i, k), y.colour(i, l), x.colour(j, k),
                                 y.colour(j, l)));
        }
    return out;
}

std::vector<CorrespondingPair> omission_pair_census(const Family& f) {
    std::vector<CorrespondingPair> out;
    std::set<Code> seen;
    for (const auto& code : candidate_codes(f)) {
        Code key = std::min(code, swapped(code));
        if (seen.count(key)) continue;
        auto a = omission_set_with_code(f, key);
        auto b = omission_set_with_code(f, swapped(key));
        if (a && b && a->both_types() && b->both_types()) {
            seen.insert(key);
            out.push_back({key, *a, *b});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CorrespondingPair& x, const CorrespondingPair& y) { return x.code < y.code; });
    return out;
}

}  // namespace homog
