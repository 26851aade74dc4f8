#pragma once

#include "homog/family.hpp"
#include "homog/omission.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homog {

/// a embeds in b once b's {i,j} edge takes a's colour. Throws
/// std::invalid_argument unless both are defined on i and j.
bool off_edge_subgraph(const Monic& a, const Monic& b, int i, int j);

enum class Relation { below, above, equivalent, incomparable };
std::string to_string(Relation r);

struct QuasiOrderView {
    CoverSet cover;
    /// relation[c][d] places A^c relative to A^d.
    std::vector<std::vector<Relation>> relation;
    std::vector<bool> maximal;
    /// Maximal colours grouped by off-edge isomorphism.
    std::vector<std::vector<Colour>> maximal_classes;
    int t = 0;

    /// A^c <=_ij A^d
    bool le(Colour c, Colour d) const {
        return relation[c][d] == Relation::below || relation[c][d] == Relation::equivalent;
    }
};

QuasiOrderView quasi_order(const CoverSet& a);

/// Every A^c (c != alpha) is below A^alpha or becomes free once its {i,j}
/// edge is recoloured alpha.
bool is_key_colour(const CoverSet& a, const Family& f, Colour alpha);
/// Least key colour.
std::optional<Colour> is_good(const CoverSet& a, const Family& f);
/// Good, and some key monic is on four or more parts or is a triangle with
/// no other member defined on {i,j} plus every part outside it. Throws
/// std::invalid_argument if a is not good.
bool is_star(const CoverSet& a, const Family& f);
/// Each maximal element of a sits below a maximal element of b.
bool precedes(const CoverSet& a, const CoverSet& b);
/// Omega(a) is contained in Omega(b).
bool based_on(const CoverSet& a, const CoverSet& b, int part_count);

/// One member per colour of C_ij, each a member of f with the right colour.
bool in_lambda(const CoverSet& a, const Family& f);

struct GcssaState {
    int step = 0;
    CoverSet cover;
    std::vector<Colour> delta;  // sorted
    Colour gamma = 0;
    std::optional<Colour> replacement_colour;  // delta_i
    std::optional<Monic> replacement;          // D^{gamma_i}
    bool good_replacement = false;
};

enum class GcssaKind { good, reduced, stalled };
std::string to_string(GcssaKind k);

struct GcssaOutcome {
    GcssaKind kind = GcssaKind::stalled;
    CoverSet cover;             // the good set or D
    std::optional<Colour> key;  // the final test colour when good
    std::vector<GcssaState> trace;
    std::string note;           // why a run stalled
};

/// Runs the search from b0. Without gamma0 the least maximal colour starts.
/// Stops as good, reduced, or stalled (no replacement member, no maximal
/// test colour, a monic tested twice, or more than |f| + |C_ij| steps).
/// Throws std::invalid_argument if b0 is not in Lambda or gamma0 is not
/// maximal.
GcssaOutcome gcssa_run(const CoverSet& b0, const Family& f, std::optional<Colour> gamma0 = std::nullopt);

struct CoverSearch {
    std::optional<CoverSet> cover;
    std::optional<Colour> key;
    /// Lambda_a was enumerated completely, so the start really had least t.
    bool minimal_certified = false;
    std::uint64_t examined = 0;
    std::vector<GcssaOutcome> runs;
    std::vector<std::string> findings;
};

struct CoverSearchOptions {
    std::uint64_t budget = 1'000'000;  // cover sets examined for the start
    int max_rounds = 64;
};

/// Good cover set based on a, iterating the search from an a-minimal start.
/// Throws std::invalid_argument if f does not pass classify or a is not in
/// Lambda.
CoverSearch find_good_cover_set(const CoverSet& a, const Family& f, const CoverSearchOptions& opts = {});
/// Star cover set based on a: repeatedly restarts the search at a large
/// member of a non-star good set.
CoverSearch find_star_cover_set(const CoverSet& a, const Family& f, const CoverSearchOptions& opts = {});

}  // namespace homog
