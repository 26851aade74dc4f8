#pragma once

#include "homog/language.hpp"

#include <span>
#include <vector>

namespace homog {

/// Finite coloured multipartite graph. Vertices are dense ids 0..size()-1,
/// each carrying a part label; every cross-part pair carries a colour and
/// same-part pairs carry none.
class Graph {
public:
    Graph() = default;
    explicit Graph(int part_count) : parts_(part_count) {}

    int part_count() const { return parts_; }
    int size() const { return static_cast<int>(part_.size()); }
    int part(int v) const { return part_[v]; }
    const std::vector<int>& parts() const { return part_; }

    /// kNoColour for same-part pairs and for u == v.
    Colour colour(int u, int v) const { return colour_[u * size() + v]; }

    std::vector<int> vertices_in_part(int p) const;
    std::vector<int> part_sizes() const;

    /// Copy with one more vertex; `to_existing[u]` is the colour to vertex u
    /// and is ignored for vertices in the same part.
    Graph with_vertex(int part, std::span<const Colour> to_existing) const;
    Graph induced(std::span<const int> vertices) const;
    Graph recoloured(int u, int v, Colour c) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    int parts_ = 0;
    std::vector<int> part_;
    std::vector<Colour> colour_;
};

/// Mutable construction helper; build() checks totality.
class GraphBuilder {
public:
    explicit GraphBuilder(int part_count) : g_(part_count) {}

    int add_vertex(int part);
    void set_colour(int u, int v, Colour c);
    int size() const { return g_.size(); }
    Graph build() const;

private:
    Graph g_;
};

/// Colours in range for every cross-part pair, parts in range.
ValidationReport validate_graph(const Graph& g, const Language& lang);

/// Position of the unordered pair {i,j} in lexicographic order over i<j.
constexpr int pair_slot(int m, int i, int j) {
    if (i > j) {
        int t = i;
        i = j;
        j = t;
    }
    return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

}  // namespace homog
