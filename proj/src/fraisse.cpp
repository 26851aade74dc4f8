#include "homog/fraisse.hpp"

#include "homog/checker.hpp"
#include "homog/embed.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace homog {

namespace {

/// Growing graph whose newest vertex may still have undecided edges.
class Builder {
public:
    Builder(const Family& f, std::mt19937_64& rng) : f_(f), lang_(f.language()), m_(lang_.parts()), rng_(rng) {
        by_part_.resize(m_);
    }

    int size() const { return static_cast<int>(part_.size()); }
    int part(int v) const { return part_[v]; }
    Colour colour(int u, int v) const { return adj_[u][v]; }
    const std::vector<int>& in_part(int p) const { return by_part_[p]; }

    /// Some vertex outside U in part p realizes the type.
    bool realized(const std::vector<int>& u, int p, const std::vector<Colour>& type) const {
        for (int y : by_part_[p]) {
            if (std::find(u.begin(), u.end(), y) != u.end()) continue;
            bool ok = true;
            for (std::size_t k = 0; k < u.size() && ok; ++k)
                if (type[k] != kNoColour && adj_[y][u[k]] != type[k]) ok = false;
            if (ok) return true;
        }
        return false;
    }

    /// Type over U is free: adding x with these colours embeds no member.
    bool type_free(const std::vector<int>& u, int p, const std::vector<Colour>& type) {
        int x = open(p);
        bool ok = true;
        for (std::size_t k = 0; k < u.size() && ok; ++k) {
            if (type[k] == kNoColour) continue;
            set(x, u[k], type[k]);
            ok = !blocked(x, u[k]);
        }
        close();
        return ok;
    }

    /// Adds a vertex realizing the type, completing the other edges. False on
    /// a completion dead end (the vertex is removed).
    bool add(const std::vector<int>& u, int p, const std::vector<Colour>& type) {
        int x = open(p);
        for (std::size_t k = 0; k < u.size(); ++k)
            if (type[k] != kNoColour) {
                set(x, u[k], type[k]);
                if (blocked(x, u[k])) {
                    close();
                    return false;
                }
            }
        std::vector<int> rest;
        for (int w = 0; w < x; ++w)
            if (part_[w] != p && adj_[x][w] == kNoColour) rest.push_back(w);
        std::shuffle(rest.begin(), rest.end(), rng_);
        for (int w : rest) {
            const int cc = lang_.colour_count(p, part_[w]);
            std::vector<Colour> order(cc);
            std::iota(order.begin(), order.end(), Colour(0));
            std::shuffle(order.begin(), order.end(), rng_);
            bool placed = false;
            for (Colour c : order) {
                set(x, w, c);
                if (!blocked(x, w)) {
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                close();
                return false;
            }
        }
        by_part_[p].push_back(x);
        return true;
    }

    Graph graph() const {
        GraphBuilder b(m_);
        for (int v = 0; v < size(); ++v) b.add_vertex(part_[v]);
        for (int u = 0; u < size(); ++u)
            for (int v = u + 1; v < size(); ++v)
                if (part_[u] != part_[v]) b.set_colour(u, v, adj_[u][v]);
        return b.build();
    }

private:
    int open(int p) {
        const int x = size();
        part_.push_back(p);
        for (auto& row : adj_) row.push_back(kNoColour);
        adj_.emplace_back(x + 1, kNoColour);
        return x;
    }

    void close() {
        part_.pop_back();
        adj_.pop_back();
        for (auto& row : adj_) row.pop_back();
    }

    void set(int x, int w, Colour c) {
        adj_[x][w] = c;
        adj_[w][x] = c;
    }

    /// Some member embeds using the edge xw and decided edges only.
    bool blocked(int x, int w) const {
        const int px = part_[x], pw = part_[w];
        const Colour c = adj_[x][w];
        for (const Monic& a : f_.members()) {
            if (!a.defined_on(px, pw) || a.colour(px, pw) != c) continue;
            std::vector<int> others;
            for (int q : a.parts())
                if (q != px && q != pw) others.push_back(q);
            std::vector<std::vector<int>> cand(others.size());
            bool empty = false;
            for (std::size_t k = 0; k < others.size() && !empty; ++k) {
                const int q = others[k];
                for (int v : by_part_[q])
                    if (adj_[v][x] == a.colour(q, px) && adj_[v][w] == a.colour(q, pw)) cand[k].push_back(v);
                empty = cand[k].empty();
            }
            if (empty) continue;
            std::vector<int> pick(others.size(), -1);
            auto place = [&](auto&& self, std::size_t k) -> bool {
                if (k == others.size()) return true;
                for (int v : cand[k]) {
                    bool ok = true;
                    for (std::size_t e = 0; e < k && ok; ++e)
                        ok = adj_[v][pick[e]] == a.colour(others[k], others[e]);
                    if (!ok) continue;
                    pick[k] = v;
                    if (self(self, k + 1)) return true;
                }
                return false;
            };
            if (place(place, 0)) return true;
        }
        return false;
    }

    const Family& f_;
    const Language& lang_;
    int m_;
    std::mt19937_64& rng_;
    std::vector<int> part_;
    std::vector<std::vector<Colour>> adj_;
    std::vector<std::vector<int>> by_part_;
};

/// Subsets of {0..t-1} of size below `limit`, each with t appended, in
/// lexicographic order.
std::vector<std::vector<int>> subsets_ending_at(int t, int limit) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        std::vector<int> u = cur;
        u.push_back(t);
        out.push_back(std::move(u));
        if (static_cast<int>(cur.size()) + 1 >= limit) return;
        for (int v = from; v < t; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

BuildReport build_generic(const Family& f, const BuildConfig& cfg) {
    const auto& lang = f.language();
    const int m = lang.parts();
    if (cfg.n < m) throw std::invalid_argument("build: n must be at least the part count");
    if (cfg.s < 1) throw std::invalid_argument("build: s must be at least 1");
    if (!classify(f).passed()) throw std::invalid_argument("build: family does not pass classify");

    std::mt19937_64 rng(cfg.seed);
    Builder b(f, rng);
    BuildReport rep;
    bool dead_end = false;

    // Types over U, one odometer per part; the part currently smallest is
    // served first so that the cut at n leaves the parts balanced.
    auto serve = [&](const std::vector<int>& u) {
        struct Cursor {
            std::vector<int> slots;
            std::vector<Colour> type;
            bool done = false;
        };
        std::vector<Cursor> cur(m);
        for (int p = 0; p < m; ++p) {
            cur[p].type.assign(u.size(), kNoColour);
            for (std::size_t k = 0; k < u.size(); ++k)
                if (b.part(u[k]) != p) {
                    cur[p].slots.push_back(static_cast<int>(k));
                    cur[p].type[k] = 0;
                }
        }
        while (b.size() < cfg.n) {
            int p = -1;
            for (int q = 0; q < m; ++q)
                if (!cur[q].done && (p < 0 || b.in_part(q).size() < b.in_part(p).size())) p = q;
            if (p < 0) return;
            auto& c = cur[p];
            if (b.type_free(u, p, c.type)) {
                ++rep.demands_issued;
                if (b.realized(u, p, c.type)) {
                    ++rep.demands_satisfied;
                } else if (b.add(u, p, c.type)) {
                    ++rep.demands_satisfied;
                    ++rep.demand_vertices;
                } else {
                    dead_end = true;
                    rep.findings.push_back("colour completion dead end while serving a demand");
                    return;
                }
            }
            std::size_t k = 0;
            for (; k < c.slots.size(); ++k) {
                const int s = c.slots[k];
                if (++c.type[s] < lang.colour_count(p, b.part(u[s]))) break;
                c.type[s] = 0;
            }
            if (k == c.slots.size()) c.done = true;
        }
    };

    serve({});
    for (int t = 0; t < b.size() && b.size() < cfg.n && !dead_end; ++t)
        for (const auto& u : subsets_ending_at(t, cfg.s)) {
            if (b.size() >= cfg.n || dead_end) break;
            serve(u);
        }

    int next_part = 0;
    while (b.size() < cfg.n && !dead_end) {
        int p = next_part;
        if (cfg.policy == PartPolicy::smallest_part) {
            p = 0;
            for (int q = 1; q < m; ++q)
                if (b.in_part(q).size() < b.in_part(p).size()) p = q;
        }
        next_part = (next_part + 1) % m;
        if (!b.add({}, p, {})) {
            dead_end = true;
            rep.findings.push_back("colour completion dead end while adding a filler vertex");
        } else {
            ++rep.filler_vertices;
        }
    }

    rep.graph = b.graph();
    rep.part_sizes = rep.graph.part_sizes();
    rep.audit = audit_age(rep.graph, f, std::min(cfg.audit_parts_bound, m));
    return rep;
}

AgeAudit audit_age(const Graph& g, const Family& f, int parts_bound) {
    const auto& lang = f.language();
    const int m = lang.parts();
    AgeAudit out;
    for (const Monic& a : f.members()) {
        std::vector<int> w;
        if (embeds(a, g, &w)) out.forbidden.push_back({a, w});
    }
    const int bound = std::min(parts_bound, m);
    for (PartMask mask = 1; mask < (PartMask(1) << m); ++mask) {
        const int k = popcount(mask);
        if (k < 2 || k > bound) continue;
        auto ps = mask_parts(mask);
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < k; ++x)
            for (int y = x + 1; y < k; ++y) pairs.emplace_back(ps[x], ps[y]);
        std::vector<Colour> cols(pairs.size(), 0);
        while (true) {
            Monic a(m, ps, cols);
            if (is_free(a, f)) {
                ++out.free_types;
                if (!embeds(a, g)) out.missing.push_back(a);
            }
            std::size_t e = 0;
            for (; e < pairs.size(); ++e) {
                if (++cols[e] < lang.colour_count(pairs[e].first, pairs[e].second)) break;
                cols[e] = 0;
            }
            if (e == pairs.size()) break;
        }
    }
    std::sort(out.missing.begin(), out.missing.end());
    return out;
}

HomogeneitySample sample_homogeneity(const Graph& g, int k, std::uint64_t trials, std::uint64_t seed) {
    HomogeneitySample out;
    out.trials = trials;
    if (trials == 0) return out;
    std::mt19937_64 rng(seed);
    const int n = g.size();
    std::vector<std::vector<int>> by_part(g.part_count());
    for (int v = 0; v < n; ++v) by_part[g.part(v)].push_back(v);

    for (std::uint64_t t = 0; t < trials; ++t) {
        const int r = std::min(1 + static_cast<int>(rng() % std::max(k, 1)), n - 1);
        if (r < 1) continue;
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> dom(all.begin(), all.begin() + r);
        const int x = all[r];

        std::vector<int> img(r, -1);
        auto place = [&](auto&& self, int i) -> bool {
            if (i == r) return true;
            std::vector<int> cand = by_part[g.part(dom[i])];
            std::shuffle(cand.begin(), cand.end(), rng);
            for (int v : cand) {
                bool ok = true;
                for (int e = 0; e < i && ok; ++e)
                    ok = v != img[e] && g.colour(v, img[e]) == g.colour(dom[i], dom[e]);
                if (!ok) continue;
                img[i] = v;
                if (self(self, i + 1)) return true;
            }
            return false;
        };
        place(place, 0);

        bool found = false;
        for (int y : by_part[g.part(x)]) {
            if (std::find(img.begin(), img.end(), y) != img.end()) continue;
            bool ok = true;
            for (int e = 0; e < r && ok; ++e) ok = g.colour(y, img[e]) == g.colour(x, dom[e]);
            if (ok) {
                found = true;
                break;
            }
        }
        if (found) {
            ++out.successes;
        } else if (out.failures.size() < 10) {
            std::ostringstream s;
            s << "dom";
            for (int v : dom) s << ' ' << v;
            s << " -> img";
            for (int v : img) s << ' ' << v;
            s << "; source " << x;
            out.failures.push_back(s.str());
        }
    }
    out.rate = static_cast<double>(out.successes) / static_cast<double>(trials);
    return out;
}

}  // namespace homog
