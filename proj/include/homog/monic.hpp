#pragma once

#include "homog/graph.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace homog {

using PartMask = std::uint32_t;

inline int popcount(PartMask m) { return __builtin_popcount(m); }
inline bool has_part(PartMask m, int p) { return (m >> p) & 1u; }
std::vector<int> mask_parts(PartMask m);
PartMask parts_mask(const std::vector<int>& parts);

/// A graph with at most one vertex per part, stored as its part set J and
/// one colour per pair of J. Written [J; chi] with chi in lexicographic
/// pair order.
class Monic {
public:
    Monic() = default;

    /// Throws std::invalid_argument unless `parts` is strictly increasing,
    /// in range, has at least two entries, and `colours` has one entry per
    /// pair of `parts`.
    Monic(int part_count, const std::vector<int>& parts, const std::vector<Colour>& colours);

    int part_count() const { return m_; }
    PartMask mask() const { return mask_; }
    int size() const { return popcount(mask_); }
    bool has(int p) const { return has_part(mask_, p); }
    bool defined_on(int i, int j) const { return has(i) && has(j); }
    std::vector<int> parts() const { return mask_parts(mask_); }

    /// kNoColour when the monic lacks either part.
    Colour colour(int i, int j) const { return edges_[pair_slot(m_, i, j)]; }
    /// Colours in lexicographic pair order over parts().
    std::vector<Colour> colours() const;

    Graph to_graph() const;
    /// Throws std::invalid_argument if g has two vertices in one part or
    /// fewer than two vertices.
    static Monic from_graph(const Graph& g);

    /// Unchecked edge change; the monic must be defined on {i,j}.
    Monic with_colour(int i, int j, Colour c) const;
    /// Restriction to the parts in `mask`; needs at least two of them.
    Monic restricted(PartMask mask) const;

    /// Parts of *this are a subset of b's and the shared edges agree.
    bool embeds_in(const Monic& b) const;

    friend bool operator==(const Monic& a, const Monic& b) {
        return a.m_ == b.m_ && a.mask_ == b.mask_ && a.edges_ == b.edges_;
    }
    /// Part list lexicographically, then colours in pair order.
    friend std::strong_ordering operator<=>(const Monic& a, const Monic& b);

    std::size_t hash() const;

private:
    int m_ = 0;
    PartMask mask_ = 0;
    std::vector<Colour> edges_;
};

/// A^{c} with the {i,j} edge recoloured. Throws std::invalid_argument if a
/// lacks part i or j, or c is not a colour of C_ij.
Monic recolour_edge(const Monic& a, int i, int j, Colour c, const Language& lang);

/// Part range and colour range checks against lang.
ValidationReport validate_monic(const Monic& a, const Language& lang);

/// Bracket notation, e.g. "[012; a a b]"; parts are comma-separated when
/// the language has more than ten parts.
std::string format_monic(const Monic& a, const Language& lang);

}  // namespace homog

template <>
struct std::hash<homog::Monic> {
    std::size_t operator()(const homog::Monic& a) const noexcept { return a.hash(); }
};
