#include "homog/gcssa.hpp"

#include "homog/checker.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homog {

bool off_edge_subgraph(const Monic& a, const Monic& b, int i, int j) {
    if (!a.defined_on(i, j) || !b.defined_on(i, j))
        throw std::invalid_argument("off_edge_subgraph: monics must be defined on the pair");
    return a.embeds_in(b.with_colour(i, j, a.colour(i, j)));
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::below: return "below";
        case Relation::above: return "above";
        case Relation::equivalent: return "equivalent";
        case Relation::incomparable: return "incomparable";
    }
    return "?";
}

std::string to_string(GcssaKind k) {
    switch (k) {
        case GcssaKind::good: return "good";
        case GcssaKind::reduced: return "reduced";
        case GcssaKind::stalled: return "stalled";
    }
    return "?";
}

QuasiOrderView quasi_order(const CoverSet& a) {
    QuasiOrderView q;
    q.cover = a;
    const int n = static_cast<int>(a.by_colour.size());
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) le[c][d] = off_edge_subgraph(a.by_colour[c], a.by_colour[d], a.i, a.j);
    q.relation.assign(n, std::vector<Relation>(n, Relation::incomparable));
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
            if (le[c][d] && le[d][c]) q.relation[c][d] = Relation::equivalent;
            else if (le[c][d]) q.relation[c][d] = Relation::below;
            else if (le[d][c]) q.relation[c][d] = Relation::above;
        }
    q.maximal.assign(n, true);
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
            if (le[c][d] && !le[d][c]) q.maximal[c] = false;
    for (int c = 0; c < n; ++c) {
        if (!q.maximal[c]) continue;
        bool placed = false;
        for (auto& cls : q.maximal_classes)
            if (le[c][cls.front()] && le[cls.front()][c]) {
                cls.push_back(Colour(c));
                placed = true;
                break;
            }
        if (!placed) q.maximal_classes.push_back({Colour(c)});
    }
    q.t = static_cast<int>(q.maximal_classes.size());
    return q;
}

namespace {

bool recoloured_free(const CoverSet& a, const Family& f, Colour c, Colour to) {
    return is_free(a.member(c).with_colour(a.i, a.j, to), f);
}

bool key_for(const CoverSet& a, const QuasiOrderView& q, const Family& f, Colour alpha) {
    const int n = static_cast<int>(a.by_colour.size());
    for (int c = 0; c < n; ++c) {
        if (c == alpha) continue;
        if (!q.le(Colour(c), alpha) && !recoloured_free(a, f, Colour(c), alpha)) return false;
    }
    return true;
}

PartMask full_mask(int m) { return m >= 32 ? ~PartMask(0) : (PartMask(1) << m) - 1; }

/// Mask a member must cover to spoil a triangle key monic.
PartMask spoiling_mask(const CoverSet& a, Colour key, int m) {
    return (full_mask(m) & ~a.member(key).mask()) | (PartMask(1) << a.i) | (PartMask(1) << a.j);
}

bool star_key(const CoverSet& a, Colour key, int m) {
    const Monic& k = a.member(key);
    if (k.size() >= 4) return true;
    PartMask need = spoiling_mask(a, key, m);
    for (std::size_t c = 0; c < a.by_colour.size(); ++c)
        if (Colour(c) != key && (a.by_colour[c].mask() & need) == need) return false;
    return true;
}

}  // namespace

bool is_key_colour(const CoverSet& a, const Family& f, Colour alpha) {
    return key_for(a, quasi_order(a), f, alpha);
}

std::optional<Colour> is_good(const CoverSet& a, const Family& f) {
    auto q = quasi_order(a);
    for (std::size_t c = 0; c < a.by_colour.size(); ++c)
        if (key_for(a, q, f, Colour(c))) return Colour(c);
    return std::nullopt;
}

bool is_star(const CoverSet& a, const Family& f) {
    auto q = quasi_order(a);
    bool good = false;
    for (std::size_t c = 0; c < a.by_colour.size(); ++c) {
        if (!key_for(a, q, f, Colour(c))) continue;
        good = true;
        if (star_key(a, Colour(c), f.part_count())) return true;
    }
    if (!good) throw std::invalid_argument("is_star: cover set is not good");
    return false;
}

bool precedes(const CoverSet& a, const CoverSet& b) {
    if (a.i != b.i || a.j != b.j) return false;
    auto qa = quasi_order(a);
    auto qb = quasi_order(b);
    for (std::size_t c = 0; c < a.by_colour.size(); ++c) {
        if (!qa.maximal[c]) continue;
        bool below = false;
        for (std::size_t d = 0; d < b.by_colour.size() && !below; ++d)
            below = qb.maximal[d] && off_edge_subgraph(a.by_colour[c], b.by_colour[d], a.i, a.j);
        if (!below) return false;
    }
    return true;
}

bool based_on(const CoverSet& a, const CoverSet& b, int part_count) {
    auto ca = codes_based_on(a, part_count);
    auto cb = codes_based_on(b, part_count);
    return std::includes(cb.begin(), cb.end(), ca.begin(), ca.end());
}

bool in_lambda(const CoverSet& a, const Family& f) {
    const auto& lang = f.language();
    if (a.i < 0 || a.j >= f.part_count() || a.i >= a.j) return false;
    if (static_cast<int>(a.by_colour.size()) != lang.colour_count(a.i, a.j)) return false;
    for (std::size_t c = 0; c < a.by_colour.size(); ++c) {
        const Monic& m = a.by_colour[c];
        if (m.part_count() != f.part_count() || !m.defined_on(a.i, a.j) || m.colour(a.i, a.j) != Colour(c) ||
            !f.contains(m))
            return false;
    }
    return true;
}

GcssaOutcome gcssa_run(const CoverSet& b0, const Family& f, std::optional<Colour> gamma0) {
    if (!in_lambda(b0, f)) throw std::invalid_argument("gcssa: cover set is not in Lambda for this family");
    const int n = static_cast<int>(b0.by_colour.size());
    const int i = b0.i, j = b0.j;

    GcssaOutcome out;
    CoverSet cur = b0;
    auto q = quasi_order(cur);
    Colour gamma;
    if (gamma0) {
        if (*gamma0 >= n || !q.maximal[*gamma0])
            throw std::invalid_argument("gcssa: gamma0 is not a maximal colour");
        gamma = *gamma0;
    } else {
        gamma = Colour(std::find(q.maximal.begin(), q.maximal.end(), true) - q.maximal.begin());
    }

    std::vector<Colour> delta;
    for (int c = 0; c < n; ++c) {
        bool in = true;
        for (int d = 0; d < n && in; ++d)
            if (q.le(Colour(c), Colour(d)) && !q.le(Colour(d), gamma)) in = false;
        if (in) delta.push_back(Colour(c));
    }

    const std::size_t limit = f.size() + static_cast<std::size_t>(n);
    std::set<Monic> tested;
    for (int step = 0;; ++step) {
        GcssaState st;
        st.step = step;
        st.cover = cur;
        st.delta = delta;
        st.gamma = gamma;

        if (static_cast<std::size_t>(step) > limit) {
            out.trace.push_back(st);
            out.kind = GcssaKind::stalled;
            out.cover = cur;
            out.note = "step limit exceeded";
            return out;
        }
        if (!tested.insert(cur.member(gamma)).second) {
            out.trace.push_back(st);
            out.kind = GcssaKind::stalled;
            out.cover = cur;
            out.note = "test monic " + format_monic(cur.member(gamma), f.language()) + " tested twice";
            return out;
        }
        if (key_for(cur, q, f, gamma)) {
            out.trace.push_back(st);
            out.kind = GcssaKind::good;
            out.cover = cur;
            out.key = gamma;
            return out;
        }

        std::optional<Colour> pick;
        for (int pass = 0; pass < 2 && !pick; ++pass)
            for (int d = 0; d < n; ++d) {
                bool outside = !std::binary_search(delta.begin(), delta.end(), Colour(d));
                if ((pass == 0) != outside) continue;
                if (q.le(Colour(d), gamma) || recoloured_free(cur, f, Colour(d), gamma)) continue;
                pick = Colour(d);
                break;
            }
        if (!pick) {
            out.trace.push_back(st);
            out.kind = GcssaKind::stalled;
            out.cover = cur;
            out.note = "no replacement colour";
            return out;
        }
        Monic host = cur.member(*pick).with_colour(i, j, gamma);
        std::optional<Monic> repl;
        for (const Monic& m : f.members())
            if (m.defined_on(i, j) && m.embeds_in(host)) {
                repl = m;
                break;
            }
        st.replacement_colour = pick;
        st.good_replacement = !std::binary_search(delta.begin(), delta.end(), *pick);
        if (!repl) {
            out.trace.push_back(st);
            out.kind = GcssaKind::stalled;
            out.cover = cur;
            out.note = "no member defined on the pair embeds in the recoloured monic";
            return out;
        }
        st.replacement = repl;
        out.trace.push_back(st);

        CoverSet next = cur;
        next.by_colour[gamma] = *repl;
        if (st.good_replacement) delta.erase(std::find(delta.begin(), delta.end(), gamma));
        if (delta.empty()) {
            out.kind = GcssaKind::reduced;
            out.cover = next;
            return out;
        }
        auto nq = quasi_order(next);
        std::optional<Colour> ng;
        for (Colour c : delta)
            if (c != gamma && nq.maximal[c] && q.le(c, gamma)) {
                ng = c;
                break;
            }
        if (!ng)
            for (Colour c : delta)
                if (nq.maximal[c]) {
                    ng = c;
                    break;
                }
        if (!ng) {
            GcssaState tail;
            tail.step = step + 1;
            tail.cover = next;
            tail.delta = delta;
            tail.gamma = gamma;
            out.trace.push_back(tail);
            out.kind = GcssaKind::stalled;
            out.cover = next;
            out.note = "no maximal test colour left";
            return out;
        }
        cur = std::move(next);
        q = std::move(nq);
        gamma = *ng;
    }
}

namespace {

void require_passing(const CoverSet& a, const Family& f) {
    if (!classify(f).passed()) throw std::invalid_argument("cover set search needs a family that passes classify");
    if (!in_lambda(a, f)) throw std::invalid_argument("cover set search: cover set is not in Lambda");
}

CoverSearch good_search(const CoverSet& a, const Family& f, const CoverSearchOptions& opts) {
    const int m = f.part_count();
    CoverSearch r;
    if (auto key = is_good(a, f)) {
        r.cover = a;
        r.key = key;
        return r;
    }
    auto stream = enumerate_cover_sets(f, a.i, a.j);
    std::optional<CoverSet> start;
    int best = 0;
    bool exhausted = false;
    while (r.examined < opts.budget) {
        auto b = stream.next();
        if (!b) {
            exhausted = true;
            break;
        }
        ++r.examined;
        if (!based_on(*b, a, m)) continue;
        int t = quasi_order(*b).t;
        if (!start || t < best) {
            start = *b;
            best = t;
        }
    }
    if (!start) start = a;
    r.minimal_certified = exhausted;
    if (!exhausted) r.findings.push_back("Lambda enumeration hit the budget; start is not certified minimal");

    CoverSet cur = *start;
    for (int round = 0; round < opts.max_rounds; ++round) {
        auto out = gcssa_run(cur, f);
        r.runs.push_back(out);
        if (out.kind == GcssaKind::good) {
            r.cover = out.cover;
            r.key = out.key;
            return r;
        }
        if (out.kind == GcssaKind::stalled) {
            r.findings.push_back("search stalled: " + out.note);
            return r;
        }
        if (round == 0 && exhausted)
            r.findings.push_back("search from a minimal start reduced t to " + std::to_string(quasi_order(out.cover).t));
        cur = out.cover;
    }
    r.findings.push_back("no good cover set within the round limit");
    return r;
}

}  // namespace

CoverSearch find_good_cover_set(const CoverSet& a, const Family& f, const CoverSearchOptions& opts) {
    require_passing(a, f);
    return good_search(a, f, opts);
}

CoverSearch find_star_cover_set(const CoverSet& a, const Family& f, const CoverSearchOptions& opts) {
    require_passing(a, f);
    const int m = f.part_count();
    CoverSearch r = good_search(a, f, opts);
    std::set<std::vector<Monic>> seen;
    for (int round = 0; r.cover && round < opts.max_rounds; ++round) {
        CoverSet b = *r.cover;
        if (is_star(b, f)) return r;
        if (!seen.insert(b.by_colour).second) {
            r.findings.push_back("star search revisited a good cover set");
            r.cover.reset();
            r.key.reset();
            return r;
        }
        Colour key = *is_good(b, f);
        PartMask need = spoiling_mask(b, key, m);
        Colour beta = 0;
        for (std::size_t c = 0; c < b.by_colour.size(); ++c)
            if (Colour(c) != key && (b.by_colour[c].mask() & need) == need) {
                beta = Colour(c);
                break;
            }
        auto q = quasi_order(b);
        Colour g0 = beta;
        if (!q.maximal[beta])
            for (std::size_t d = 0; d < b.by_colour.size(); ++d)
                if (q.maximal[d] && q.le(beta, Colour(d))) {
                    g0 = Colour(d);
                    break;
                }
        auto out = gcssa_run(b, f, g0);
        r.runs.push_back(out);
        if (out.kind == GcssaKind::good) {
            r.cover = out.cover;
            r.key = out.key;
        } else if (out.kind == GcssaKind::reduced) {
            auto sub = good_search(out.cover, f, opts);
            r.examined += sub.examined;
            r.runs.insert(r.runs.end(), sub.runs.begin(), sub.runs.end());
            r.findings.insert(r.findings.end(), sub.findings.begin(), sub.findings.end());
            r.cover = sub.cover;
            r.key = sub.key;
        } else {
            r.findings.push_back("star search stalled: " + out.note);
            r.cover.reset();
            r.key.reset();
            return r;
        }
    }
    if (r.cover && !is_star(*r.cover, f)) {
        r.findings.push_back("no star cover set within the round limit");
        r.cover.reset();
        r.key.reset();
    }
    return r;
}

}  // namespace homog
