#include "homog/graph.hpp"

#include <stdexcept>
#include <string>

namespace homog {

std::vector<int> Graph::vertices_in_part(int p) const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (part_[v] == p) out.push_back(v);
    return out;
}

std::vector<int> Graph::part_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(parts_), 0);
    for (int p : part_) ++sizes[p];
    return sizes;
}

Graph Graph::with_vertex(int part, std::span<const Colour> to_existing) const {
    if (part < 0 || part >= parts_) throw std::out_of_range("part index out of range");
    if (static_cast<int>(to_existing.size()) < size())
        throw std::invalid_argument("with_vertex: colour list shorter than graph");
    const int n = size();
    Graph g(parts_);
    g.part_ = part_;
    g.part_.push_back(part);
    g.colour_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), kNoColour);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) g.colour_[u * (n + 1) + v] = colour_[u * n + v];
    for (int u = 0; u < n; ++u) {
        Colour c = part_[u] == part ? kNoColour : to_existing[u];
        g.colour_[u * (n + 1) + n] = c;
        g.colour_[n * (n + 1) + u] = c;
    }
    return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
    Graph g(parts_);
    const int k = static_cast<int>(vertices.size());
    g.colour_.assign(static_cast<std::size_t>(k * k), kNoColour);
    for (int a = 0; a < k; ++a) {
        g.part_.push_back(part_.at(vertices[a]));
        for (int b = 0; b < k; ++b) g.colour_[a * k + b] = colour(vertices[a], vertices[b]);
    }
    return g;
}

Graph Graph::recoloured(int u, int v, Colour c) const {
    if (part_.at(u) == part_.at(v)) throw std::invalid_argument("recoloured: same-part pair");
    Graph g = *this;
    g.colour_[u * size() + v] = c;
    g.colour_[v * size() + u] = c;
    return g;
}

int GraphBuilder::add_vertex(int part) {
    std::vector<Colour> none(static_cast<std::size_t>(g_.size()), kNoColour);
    g_ = g_.with_vertex(part, none);
    return g_.size() - 1;
}

void GraphBuilder::set_colour(int u, int v, Colour c) {
    if (g_.part_.at(u) == g_.part_.at(v)) throw std::invalid_argument("same-part pair has no colour");
    g_.colour_[u * g_.size() + v] = c;
    g_.colour_[v * g_.size() + u] = c;
}

Graph GraphBuilder::build() const {
    for (int u = 0; u < g_.size(); ++u)
        for (int v = u + 1; v < g_.size(); ++v)
            if (g_.part(u) != g_.part(v) && g_.colour(u, v) == kNoColour)
                throw std::invalid_argument("uncoloured edge " + std::to_string(u) + "-" +
                                            std::to_string(v));
    return g_;
}

ValidationReport validate_graph(const Graph& g, const Language& lang) {
    ValidationReport report;
    if (g.part_count() != lang.parts()) report.add("graph and language disagree on part count");
    for (int v = 0; v < g.size(); ++v)
        if (g.part(v) < 0 || g.part(v) >= lang.parts())
            report.add("vertex " + std::to_string(v) + " has part out of range");
    if (!report.ok()) return report;
    for (int u = 0; u < g.size(); ++u) {
        for (int v = u + 1; v < g.size(); ++v) {
            Colour c = g.colour(u, v);
            if (g.part(u) == g.part(v)) {
                if (c != kNoColour) report.add("same-part pair " + std::to_string(u) + "-" +
                                               std::to_string(v) + " is coloured");
            } else if (c == kNoColour || c >= lang.colour_count(g.part(u), g.part(v))) {
                report.add("edge " + std::to_string(u) + "-" + std::to_string(v) +
                           " has no valid colour");
            }
        }
    }
    return report;
}

}  // namespace homog
