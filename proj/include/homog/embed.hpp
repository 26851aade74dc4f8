#pragma once

#include "homog/graph.hpp"
#include "homog/monic.hpp"

#include <vector>

namespace homog {

/// Injection of a's vertices into b's, parts fixed, colours preserved.
/// `witness`, when given and the answer is true, receives the image of each
/// vertex of a. Throws std::invalid_argument on mismatched part counts.
bool embeds(const Graph& a, const Graph& b, std::vector<int>* witness = nullptr);

/// Same for a monic; the witness is indexed like a.parts().
bool embeds(const Monic& a, const Graph& b, std::vector<int>* witness = nullptr);

/// Some embedding of a sends a's vertex in part(v) to v. False when a has
/// no vertex in that part.
bool embeds_through(const Monic& a, const Graph& b, int v, std::vector<int>* witness = nullptr);

struct MonicSelection {
    std::vector<int> vertices;  // ascending part order
    Monic monic;
};

/// Every vertex selection with at most one vertex per part and at least two
/// vertices, with the induced monic.
std::vector<MonicSelection> monic_subgraphs(const Graph& h);

}  // namespace homog
