#include "homog/monic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace homog {

std::vector<int> mask_parts(PartMask m) {
    std::vector<int> out;
    for (int p = 0; m; ++p, m >>= 1)
        if (m & 1u) out.push_back(p);
    return out;
}

PartMask parts_mask(const std::vector<int>& parts) {
    PartMask m = 0;
    for (int p : parts) m |= PartMask{1} << p;
    return m;
}

Monic::Monic(int part_count, const std::vector<int>& parts, const std::vector<Colour>& colours)
    : m_(part_count) {
    if (part_count < 2 || part_count > kMaxParts)
        throw std::invalid_argument("monic: part count out of range");
    if (parts.size() < 2) throw std::invalid_argument("monic needs at least two parts");
    for (std::size_t a = 0; a < parts.size(); ++a) {
        if (parts[a] < 0 || parts[a] >= part_count)
            throw std::invalid_argument("monic: part " + std::to_string(parts[a]) +
                                        " out of range");
        if (a > 0 && parts[a] <= parts[a - 1])
            throw std::invalid_argument("monic: parts must be strictly increasing");
    }
    const std::size_t k = parts.size();
    if (colours.size() != k * (k - 1) / 2)
        throw std::invalid_argument("monic: expected " + std::to_string(k * (k - 1) / 2) +
                                    " colours, got " + std::to_string(colours.size()));
    mask_ = parts_mask(parts);
    edges_.assign(static_cast<std::size_t>(m_ * (m_ - 1) / 2), kNoColour);
    std::size_t next = 0;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            if (colours[next] == kNoColour) throw std::invalid_argument("monic: missing colour");
            edges_[pair_slot(m_, parts[a], parts[b])] = colours[next++];
        }
}

std::vector<Colour> Monic::colours() const {
    std::vector<Colour> out;
    auto ps = parts();
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a + 1; b < ps.size(); ++b) out.push_back(colour(ps[a], ps[b]));
    return out;
}

Graph Monic::to_graph() const {
    GraphBuilder b(m_);
    auto ps = parts();
    for (int p : ps) b.add_vertex(p);
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t c = a + 1; c < ps.size(); ++c)
            b.set_colour(static_cast<int>(a), static_cast<int>(c), colour(ps[a], ps[c]));
    return b.build();
}

Monic Monic::from_graph(const Graph& g) {
    if (g.size() < 2) throw std::invalid_argument("monic needs at least two vertices");
    std::vector<int> by_part(static_cast<std::size_t>(g.part_count()), -1);
    for (int v = 0; v < g.size(); ++v) {
        if (by_part[g.part(v)] != -1)
            throw std::invalid_argument("graph is not monic: two vertices in part " +
                                        std::to_string(g.part(v)));
        by_part[g.part(v)] = v;
    }
    std::vector<int> parts;
    for (int p = 0; p < g.part_count(); ++p)
        if (by_part[p] != -1) parts.push_back(p);
    std::vector<Colour> colours;
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            colours.push_back(g.colour(by_part[parts[a]], by_part[parts[b]]));
    return Monic(g.part_count(), parts, colours);
}

Monic Monic::with_colour(int i, int j, Colour c) const {
    Monic out = *this;
    out.edges_[pair_slot(m_, i, j)] = c;
    return out;
}

Monic Monic::restricted(PartMask mask) const {
    PartMask keep = mask & mask_;
    if (popcount(keep) < 2) throw std::invalid_argument("restriction needs two parts");
    Monic out = *this;
    out.mask_ = keep;
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j)
            if (!has_part(keep, i) || !has_part(keep, j)) out.edges_[pair_slot(m_, i, j)] = kNoColour;
    return out;
}

bool Monic::embeds_in(const Monic& b) const {
    if (m_ != b.m_ || (mask_ & ~b.mask_) != 0) return false;
    for (std::size_t s = 0; s < edges_.size(); ++s)
        if (edges_[s] != kNoColour && edges_[s] != b.edges_[s]) return false;
    return true;
}

std::strong_ordering operator<=>(const Monic& a, const Monic& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    auto pa = a.parts(), pb = b.parts();
    if (auto c = std::lexicographical_compare_three_way(pa.begin(), pa.end(), pb.begin(), pb.end());
        c != 0)
        return c;
    auto ca = a.colours(), cb = b.colours();
    return std::lexicographical_compare_three_way(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::size_t Monic::hash() const {
    std::size_t h = std::hash<std::uint32_t>{}(mask_) ^ (static_cast<std::size_t>(m_) << 40);
    for (Colour c : edges_) h = h * 1099511628211ull + c;
    return h;
}

Monic recolour_edge(const Monic& a, int i, int j, Colour c, const Language& lang) {
    if (!a.defined_on(i, j))
        throw std::invalid_argument("recolour_edge: monic not defined on pair {" +
                                    std::to_string(i) + "," + std::to_string(j) + "}");
    if (c >= lang.colour_count(i, j))
        throw std::invalid_argument("recolour_edge: colour not in C_" + std::to_string(i) +
                                    std::to_string(j));
    return a.with_colour(i, j, c);
}

ValidationReport validate_monic(const Monic& a, const Language& lang) {
    ValidationReport report;
    if (a.part_count() != lang.parts()) {
        report.add("monic and language disagree on part count");
        return report;
    }
    auto ps = a.parts();
    for (std::size_t x = 0; x < ps.size(); ++x)
        for (std::size_t y = x + 1; y < ps.size(); ++y)
            if (a.colour(ps[x], ps[y]) >= lang.colour_count(ps[x], ps[y]))
                report.add("colour out of range on pair {" + std::to_string(ps[x]) + "," +
                           std::to_string(ps[y]) + "}");
    return report;
}

std::string format_monic(const Monic& a, const Language& lang) {
    auto ps = a.parts();
    std::string out = "[";
    for (std::size_t x = 0; x < ps.size(); ++x) {
        if (lang.parts() > 10 && x > 0) out += ",";
        out += std::to_string(ps[x]);
    }
    out += ";";
    for (std::size_t x = 0; x < ps.size(); ++x)
        for (std::size_t y = x + 1; y < ps.size(); ++y) {
            Colour c = a.colour(ps[x], ps[y]);
            out += " ";
            out += c < lang.colour_count(ps[x], ps[y]) ? lang.colour_name(ps[x], ps[y], c)
                                                        : "?" + std::to_string(c);
        }
    return out + "]";
}

}  // namespace homog
