#include "homog/embed.hpp"

#include <stdexcept>

namespace homog {

namespace {

struct GraphSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> image;
    std::vector<char> used;

    bool place(int v) {
        if (v == a.size()) return true;
        for (int w = 0; w < b.size(); ++w) {
            if (used[w] || b.part(w) != a.part(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a.part(u) != a.part(v) && a.colour(u, v) != b.colour(image[u], w)) ok = false;
            if (!ok) continue;
            used[w] = 1;
            image[v] = w;
            if (place(v + 1)) return true;
            used[w] = 0;
        }
        return false;
    }
};

struct MonicSearch {
    const Monic& a;
    const Graph& b;
    std::vector<int> parts;
    std::vector<std::vector<int>> candidates;
    std::vector<int> image;

    bool place(std::size_t k) {
        if (k == parts.size()) return true;
        for (int w : candidates[k]) {
            bool ok = true;
            for (std::size_t u = 0; u < k && ok; ++u)
                if (a.colour(parts[u], parts[k]) != b.colour(image[u], w)) ok = false;
            if (!ok) continue;
            image[k] = w;
            if (place(k + 1)) return true;
        }
        return false;
    }
};

void require_same_parts(int ma, int mb) {
    if (ma != mb) throw std::invalid_argument("embedding between different languages");
}

}  // namespace

bool embeds(const Graph& a, const Graph& b, std::vector<int>* witness) {
    require_same_parts(a.part_count(), b.part_count());
    if (a.size() > b.size()) return false;
    GraphSearch s{a, b, std::vector<int>(static_cast<std::size_t>(a.size()), -1),
                  std::vector<char>(static_cast<std::size_t>(b.size()), 0)};
    if (!s.place(0)) return false;
    if (witness) *witness = s.image;
    return true;
}

bool embeds(const Monic& a, const Graph& b, std::vector<int>* witness) {
    require_same_parts(a.part_count(), b.part_count());
    MonicSearch s{a, b, a.parts(), {}, {}};
    for (int p : s.parts) {
        s.candidates.push_back(b.vertices_in_part(p));
        if (s.candidates.back().empty()) return false;
    }
    s.image.assign(s.parts.size(), -1);
    if (!s.place(0)) return false;
    if (witness) *witness = s.image;
    return true;
}

bool embeds_through(const Monic& a, const Graph& b, int v, std::vector<int>* witness) {
    require_same_parts(a.part_count(), b.part_count());
    if (!a.has(b.part(v))) return false;
    MonicSearch s{a, b, a.parts(), {}, {}};
    for (int p : s.parts) {
        if (p == b.part(v)) {
            s.candidates.push_back({v});
        } else {
            s.candidates.push_back(b.vertices_in_part(p));
            if (s.candidates.back().empty()) return false;
        }
    }
    s.image.assign(s.parts.size(), -1);
    if (!s.place(0)) return false;
    if (witness) *witness = s.image;
    return true;
}

std::vector<MonicSelection> monic_subgraphs(const Graph& h) {
    std::vector<std::vector<int>> by_part(static_cast<std::size_t>(h.part_count()));
    for (int v = 0; v < h.size(); ++v) by_part[h.part(v)].push_back(v);
    std::vector<MonicSelection> out;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int p) -> void {
        if (p == h.part_count()) {
            if (chosen.size() >= 2)
                out.push_back({chosen, Monic::from_graph(h.induced(chosen))});
            return;
        }
        self(self, p + 1);
        for (int v : by_part[p]) {
            chosen.push_back(v);
            self(self, p + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace homog
