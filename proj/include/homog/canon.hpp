#pragma once

#include "homog/graph.hpp"
#include "homog/monic.hpp"

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace homog {

/// Opaque, totally ordered encoding. Equal forms mean equivalent graphs
/// under the chosen equivalence.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    std::string hex() const;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

enum class Equivalence {
    colour_isomorphism,  // part bijection, per-pair colour bijections, vertex bijections
    parts_fixed,         // vertex bijections within each part only
};

/// Brute force with prefix pruning. Throws std::length_error when the search
/// would exceed an internal node budget (large graphs).
CanonicalForm canonical_form(const Graph& g, const Language& lang,
                             Equivalence eq = Equivalence::colour_isomorphism);
CanonicalForm canonical_form(const Monic& a, const Language& lang,
                             Equivalence eq = Equivalence::colour_isomorphism);

/// Part bijections theta with |C_ij| = |C_theta(i)theta(j)| for every pair.
std::vector<std::vector<int>> profile_preserving_permutations(const Language& lang);

/// theta[p] is the image of part p; sigma[pair_index(i,j)][c] is the image
/// of colour c of C_ij in C_theta(i)theta(j).
struct ColourIsomorphism {
    std::vector<int> theta;
    std::vector<std::vector<Colour>> sigma;
};

bool is_colour_isomorphism(const ColourIsomorphism& iso, const Language& lang);
ColourIsomorphism identity_isomorphism(const Language& lang);
ColourIsomorphism random_colour_isomorphism(const Language& lang, std::mt19937_64& rng);

Monic apply(const ColourIsomorphism& iso, const Monic& a);
/// Vertex ids are kept; only part labels and colours move.
Graph apply(const ColourIsomorphism& iso, const Graph& g);

/// Vertex v of g becomes vertex perm[v].
Graph permute_vertices(const Graph& g, const std::vector<int>& perm);

}  // namespace homog
