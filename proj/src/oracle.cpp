#include "homog/oracle.hpp"

#include "homog/canon.hpp"
#include "homog/embed.hpp"
#include "homog/omission.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace homog {

Graph Diagram::b1() const { return base.with_vertex(x_part, x_colours); }

Graph Diagram::b2() const { return base.with_vertex(y_part, y_colours); }

Graph Diagram::amalgam(Colour c) const {
    std::vector<Colour> to(y_colours);
    to.push_back(c);
    return b1().with_vertex(y_part, to);
}

std::string to_string(OracleStatus s) {
    switch (s) {
        case OracleStatus::pass: return "PASS";
        case OracleStatus::fail: return "FAIL";
        case OracleStatus::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

EdgeCompletion complete_edge(const Diagram& d, const Family& f) {
    EdgeCompletion out;
    if (d.x_part == d.y_part) return out;
    const auto& lang = f.language();
    for (int c = 0; c < lang.colour_count(d.x_part, d.y_part); ++c) {
        Graph g = d.amalgam(static_cast<Colour>(c));
        std::optional<Blocker> found;
        for (const auto& a : f.members()) {
            std::vector<int> w;
            if (embeds(a, g, &w)) {
                found = Blocker{static_cast<Colour>(c), a, w};
                break;
            }
        }
        if (!found) {
            out.kind = EdgeCompletion::Kind::coloured;
            out.colour = static_cast<Colour>(c);
            out.blockers.clear();
            return out;
        }
        out.blockers.push_back(*found);
    }
    out.kind = EdgeCompletion::Kind::blocked;
    return out;
}

bool replay(const FailWitness& w, const Family& f) {
    const auto& d = w.diagram;
    const auto& lang = f.language();
    const int n = d.base.size();
    if (d.x_part == d.y_part) return false;
    if (static_cast<int>(d.x_colours.size()) != n || static_cast<int>(d.y_colours.size()) != n) return false;
    if (!is_free(d.base, f) || !is_free(d.b1(), f) || !is_free(d.b2(), f)) return false;
    std::vector<bool> covered(lang.colour_count(d.x_part, d.y_part), false);
    for (const auto& b : w.blockers) {
        if (b.colour >= covered.size() || !f.contains(b.member)) return false;
        Graph g = d.amalgam(b.colour);
        auto parts = b.member.parts();
        if (b.image.size() != parts.size()) return false;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (b.image[k] < 0 || b.image[k] >= g.size() || g.part(b.image[k]) != parts[k]) return false;
            for (std::size_t l = k + 1; l < parts.size(); ++l)
                if (g.colour(b.image[k], b.image[l]) != b.member.colour(parts[k], parts[l])) return false;
        }
        covered[b.colour] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool x) { return x; });
}

int default_max_base(const Language& lang) { return std::min(lang.completeness_bound(), 6); }

namespace {

bool free_through(const Graph& g, int v, const std::vector<Monic>& members) {
    for (const auto& a : members)
        if (embeds_through(a, g, v)) return false;
    return true;
}

std::vector<Monic> members_with(const Family& f, int p) {
    std::vector<Monic> out;
    for (const auto& a : f.members())
        if (a.has(p)) out.push_back(a);
    return out;
}

/// Free graphs on `parts`, sizes 0..max_size, one per parts-fixed class.
std::vector<Graph> free_bases(const Family& f, const std::vector<int>& parts, int max_size) {
    const auto& lang = f.language();
    std::vector<std::vector<Monic>> through(lang.parts());
    for (int p : parts) through[p] = members_with(f, p);
    std::vector<Graph> out{Graph(lang.parts())};
    std::vector<Graph> level{Graph(lang.parts())};
    for (int n = 1; n <= max_size; ++n) {
        std::set<CanonicalForm> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            for (int p : parts) {
                std::vector<int> others;
                for (int v = 0; v < g.size(); ++v)
                    if (g.part(v) != p) others.push_back(v);
                std::vector<Colour> to(g.size(), kNoColour);
                std::vector<int> digit(others.size(), 0);
                while (true) {
                    for (std::size_t k = 0; k < others.size(); ++k) to[others[k]] = static_cast<Colour>(digit[k]);
                    Graph h = g.with_vertex(p, to);
                    if (free_through(h, n - 1, through[p])) {
                        auto form = canonical_form(h, lang, Equivalence::parts_fixed);
                        if (seen.insert(form).second) next.push_back(std::move(h));
                    }
                    std::size_t k = 0;
                    for (; k < others.size(); ++k) {
                        if (++digit[k] < lang.colour_count(p, g.part(others[k]))) break;
                        digit[k] = 0;
                    }
                    if (k == others.size()) break;
                }
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

/// All colourings from a new vertex in part p to every base vertex that keep
/// base + new vertex free.
std::vector<std::vector<Colour>> free_extensions(const Graph& base, int p, const std::vector<Monic>& through,
                                                 const Language& lang) {
    const int n = base.size();
    std::vector<std::vector<Colour>> out;
    std::vector<Colour> to(n, kNoColour);
    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (base.part(v) != p) others.push_back(v);
    std::vector<int> digit(others.size(), 0);
    while (true) {
        for (std::size_t k = 0; k < others.size(); ++k) to[others[k]] = static_cast<Colour>(digit[k]);
        if (free_through(base.with_vertex(p, to), n, through)) out.push_back(to);
        std::size_t k = 0;
        for (; k < others.size(); ++k) {
            if (++digit[k] < lang.colour_count(p, base.part(others[k]))) break;
            digit[k] = 0;
        }
        if (k == others.size()) break;
    }
    return out;
}

/// A member with colour c on {p,q} placed on base vertices: the colours it
/// demands from x and from y.
struct Placement {
    Monic member;
    std::vector<int> image;  // base vertex per part of member other than p,q
    std::vector<std::pair<int, Colour>> need_x;
    std::vector<std::pair<int, Colour>> need_y;
};

std::vector<std::vector<Placement>> placements(const Family& f, const Graph& base, int p, int q) {
    const auto& lang = f.language();
    std::vector<std::vector<Placement>> out(lang.colour_count(p, q));
    for (const auto& a : f.members()) {
        if (!a.defined_on(p, q)) continue;
        std::vector<int> rest;
        for (int r : a.parts())
            if (r != p && r != q) rest.push_back(r);
        std::vector<int> image(rest.size(), -1);
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == rest.size()) {
                Placement pl{a, image, {}, {}};
                for (std::size_t t = 0; t < rest.size(); ++t) {
                    pl.need_x.emplace_back(image[t], a.colour(p, rest[t]));
                    pl.need_y.emplace_back(image[t], a.colour(q, rest[t]));
                }
                out[a.colour(p, q)].push_back(std::move(pl));
                return;
            }
            for (int v = 0; v < base.size(); ++v) {
                if (base.part(v) != rest[k]) continue;
                bool ok = true;
                for (std::size_t t = 0; t < k && ok; ++t) ok = base.colour(image[t], v) == a.colour(rest[t], rest[k]);
                if (!ok) continue;
                image[k] = v;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

bool satisfies(const std::vector<Colour>& to, const std::vector<std::pair<int, Colour>>& need) {
    for (auto [v, c] : need)
        if (to[v] != c) return false;
    return true;
}

struct PairResult {
    std::optional<FailWitness> witness;
    std::uint64_t bases = 0;
    std::uint64_t diagrams = 0;
    bool exhausted = false;
};

PairResult check_pair(const Family& f, int p, int q, const OracleOptions& opts) {
    PairResult res;
    const auto& lang = f.language();
    for (int c = 0; c < lang.colour_count(p, q); ++c) {
        bool any = false;
        for (const auto& a : f.members()) any = any || (a.defined_on(p, q) && a.colour(p, q) == c);
        if (!any) return res;
    }
    std::vector<int> others;
    for (int r = 0; r < lang.parts(); ++r)
        if (r != p && r != q) others.push_back(r);
    auto through_p = members_with(f, p);
    auto through_q = members_with(f, q);
    for (const Graph& base : free_bases(f, others, opts.max_base)) {
        ++res.bases;
        auto pl = placements(f, base, p, q);
        if (std::any_of(pl.begin(), pl.end(), [](const auto& v) { return v.empty(); })) continue;
        auto xs = free_extensions(base, p, through_p, lang);
        auto ys = free_extensions(base, q, through_q, lang);
        res.diagrams += static_cast<std::uint64_t>(xs.size()) * ys.size();
        if (res.diagrams > opts.budget) {
            res.exhausted = true;
            return res;
        }
        for (const auto& x : xs) {
            std::vector<std::vector<const Placement*>> live(pl.size());
            bool possible = true;
            for (std::size_t c = 0; c < pl.size() && possible; ++c) {
                for (const auto& place : pl[c])
                    if (satisfies(x, place.need_x)) live[c].push_back(&place);
                possible = !live[c].empty();
            }
            if (!possible) continue;
            for (const auto& y : ys) {
                std::vector<const Placement*> chosen;
                for (std::size_t c = 0; c < live.size(); ++c) {
                    const Placement* hit = nullptr;
                    for (const Placement* place : live[c])
                        if (satisfies(y, place->need_y)) {
                            hit = place;
                            break;
                        }
                    if (!hit) break;
                    chosen.push_back(hit);
                }
                if (chosen.size() != live.size()) continue;
                FailWitness w{Diagram{base, p, x, q, y}, {}};
                const int n = base.size();
                for (std::size_t c = 0; c < chosen.size(); ++c) {
                    Blocker b{static_cast<Colour>(c), chosen[c]->member, {}};
                    std::size_t t = 0;
                    for (int r : b.member.parts()) {
                        if (r == p) b.image.push_back(n);
                        else if (r == q) b.image.push_back(n + 1);
                        else b.image.push_back(chosen[c]->image[t++]);
                    }
                    w.blockers.push_back(std::move(b));
                }
                res.witness = std::move(w);
                return res;
            }
        }
    }
    return res;
}

}  // namespace

OracleVerdict bruteforce_check(const Family& f, const OracleOptions& opts) {
    const auto& lang = f.language();
    const int m = lang.parts();
    OracleVerdict v;
    v.max_base = opts.max_base;
    v.completeness_bound = lang.completeness_bound();
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q) {
            pairs.emplace_back(p, q);
            v.sufficient_bound = std::max(v.sufficient_bound, lang.colour_count(p, q) * (m - 2));
        }
    v.complete = opts.max_base >= v.sufficient_bound;
    std::vector<PairResult> results(pairs.size());
    const int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(pairs.size())));
    if (threads == 1) {
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            results[k] = check_pair(f, pairs[k].first, pairs[k].second, opts);
            if (results[k].witness || results[k].exhausted) break;
        }
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t k = t; k < pairs.size(); k += threads)
                    results[k] = check_pair(f, pairs[k].first, pairs[k].second, opts);
            });
        for (auto& th : pool) th.join();
    }
    for (std::size_t k = 0; k < results.size(); ++k) {
        v.bases += results[k].bases;
        v.diagrams += results[k].diagrams;
        if (v.status != OracleStatus::pass) continue;
        if (results[k].witness) {
            v.status = OracleStatus::fail;
            v.witness = results[k].witness;
        } else if (results[k].exhausted) {
            v.status = OracleStatus::inconclusive;
            v.note = "budget exhausted on pair {" + std::to_string(pairs[k].first) + "," +
                     std::to_string(pairs[k].second) + "}";
        }
    }
    return v;
}

namespace {

struct Item {
    int blocker;  // colour index
    int part;
    Colour x, y;
};

/// Set partitions of `ids` whose blocks are compatible under `same`.
void partitions(const std::vector<int>& ids, const std::function<bool(int, int)>& same,
                std::vector<std::vector<std::vector<int>>>& out) {
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == ids.size()) {
            out.push_back(blocks);
            return;
        }
        for (auto& b : blocks) {
            if (!same(b.front(), ids[k])) continue;
            b.push_back(ids[k]);
            self(self, k + 1);
            b.pop_back();
        }
        blocks.push_back({ids[k]});
        self(self, k + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

}  // namespace

std::optional<FailWitness> witness_search(const Family& f, int i, int j) {
    const auto& lang = f.language();
    if (i > j) std::swap(i, j);
    auto cand = cover_candidates(f, i, j);
    for (const auto& c : cand)
        if (c.empty()) return std::nullopt;
    auto through_i = members_with(f, i);
    auto through_j = members_with(f, j);
    std::vector<std::size_t> digit(cand.size(), 0);
    while (true) {
        std::vector<Monic> chosen;
        for (std::size_t c = 0; c < cand.size(); ++c) chosen.push_back(cand[c][digit[c]]);

        std::vector<Item> items;
        std::vector<std::vector<int>> item_of(chosen.size(), std::vector<int>(lang.parts(), -1));
        for (std::size_t c = 0; c < chosen.size(); ++c)
            for (int r : chosen[c].parts()) {
                if (r == i || r == j) continue;
                item_of[c][r] = static_cast<int>(items.size());
                items.push_back({static_cast<int>(c), r, chosen[c].colour(i, r), chosen[c].colour(j, r)});
            }
        auto same = [&](int a, int b) { return items[a].x == items[b].x && items[a].y == items[b].y; };

        std::vector<std::vector<std::vector<std::vector<int>>>> per_part;
        for (int r = 0; r < lang.parts(); ++r) {
            if (r == i || r == j) continue;
            std::vector<int> ids;
            for (std::size_t t = 0; t < items.size(); ++t)
                if (items[t].part == r) ids.push_back(static_cast<int>(t));
            if (ids.empty()) continue;
            per_part.emplace_back();
            partitions(ids, same, per_part.back());
        }

        std::vector<std::vector<std::vector<int>>> patterns;
        std::vector<std::size_t> pd(per_part.size(), 0);
        while (true) {
            std::vector<std::vector<int>> blocks;
            for (std::size_t k = 0; k < per_part.size(); ++k)
                for (const auto& b : per_part[k][pd[k]]) blocks.push_back(b);
            patterns.push_back(std::move(blocks));
            std::size_t k = 0;
            for (; k < per_part.size(); ++k) {
                if (++pd[k] < per_part[k].size()) break;
                pd[k] = 0;
            }
            if (k == per_part.size()) break;
        }
        std::stable_sort(patterns.begin(), patterns.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });

        for (const auto& blocks : patterns) {
            const int n = static_cast<int>(blocks.size());
            std::vector<int> block_of(items.size());
            for (int b = 0; b < n; ++b)
                for (int t : blocks[b]) block_of[t] = b;
            std::vector<Colour> fixed(static_cast<std::size_t>(n * n), kNoColour);
            bool ok = true;
            for (std::size_t c = 0; c < chosen.size() && ok; ++c) {
                auto ps = chosen[c].parts();
                for (int r : ps)
                    for (int s : ps) {
                        if (r >= s || r == i || r == j || s == i || s == j) continue;
                        int u = block_of[item_of[c][r]], w = block_of[item_of[c][s]];
                        Colour col = chosen[c].colour(r, s);
                        Colour& slot = fixed[u * n + w];
                        if (slot != kNoColour && slot != col) ok = false;
                        slot = col;
                        fixed[w * n + u] = col;
                    }
            }
            if (!ok) continue;
            std::vector<int> bpart(n);
            std::vector<Colour> bx(n), by(n);
            for (int b = 0; b < n; ++b) {
                bpart[b] = items[blocks[b].front()].part;
                bx[b] = items[blocks[b].front()].x;
                by[b] = items[blocks[b].front()].y;
            }
            std::optional<Graph> found;
            auto rec = [&](auto&& self, const Graph& g) -> void {
                const int k = g.size();
                if (k == n) {
                    found = g;
                    return;
                }
                std::vector<int> open;
                std::vector<Colour> to(k, kNoColour);
                for (int u = 0; u < k; ++u) {
                    if (bpart[u] == bpart[k]) continue;
                    if (fixed[u * n + k] != kNoColour) to[u] = fixed[u * n + k];
                    else open.push_back(u);
                }
                std::vector<int> d(open.size(), 0);
                while (!found) {
                    for (std::size_t t = 0; t < open.size(); ++t) to[open[t]] = static_cast<Colour>(d[t]);
                    Graph h = g.with_vertex(bpart[k], to);
                    std::vector<Colour> tx(bx.begin(), bx.begin() + k + 1), ty(by.begin(), by.begin() + k + 1);
                    for (int u = 0; u <= k; ++u) {
                        if (bpart[u] == i) tx[u] = kNoColour;
                        if (bpart[u] == j) ty[u] = kNoColour;
                    }
                    Graph h1 = h.with_vertex(i, tx), h2 = h.with_vertex(j, ty);
                    if (free_through(h1, k, f.members()) && free_through(h1, k + 1, through_i) &&
                        free_through(h2, k + 1, through_j))
                        self(self, h);
                    std::size_t t = 0;
                    for (; t < open.size(); ++t) {
                        if (++d[t] < lang.colour_count(bpart[k], bpart[open[t]])) break;
                        d[t] = 0;
                    }
                    if (t == open.size()) break;
                }
            };
            rec(rec, Graph(lang.parts()));
            if (!found) continue;
            FailWitness w{Diagram{*found, i, bx, j, by}, {}};
            for (std::size_t c = 0; c < chosen.size(); ++c) {
                Blocker b{static_cast<Colour>(c), chosen[c], {}};
                for (int r : chosen[c].parts()) {
                    if (r == i) b.image.push_back(n);
                    else if (r == j) b.image.push_back(n + 1);
                    else b.image.push_back(block_of[item_of[c][r]]);
                }
                w.blockers.push_back(std::move(b));
            }
            return w;
        }

        std::size_t c = cand.size();
        while (c > 0) {
            --c;
            if (++digit[c] < cand[c].size()) break;
            digit[c] = 0;
            if (c == 0) return std::nullopt;
        }
    }
}

}  // namespace homog
