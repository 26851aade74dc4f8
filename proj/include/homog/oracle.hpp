#pragma once

#include "homog/family.hpp"
#include "homog/graph.hpp"
#include "homog/monic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homog {

/// Two-point amalgamation problem: B1 = A + x, B2 = A + y.
struct Diagram {
    Graph base;
    int x_part = 0;
    std::vector<Colour> x_colours;  // colour from x to each base vertex (kNoColour within x's part)
    int y_part = 1;
    std::vector<Colour> y_colours;

    Graph b1() const;
    Graph b2() const;
    /// A + x + y with xy coloured c; x is vertex |A|, y is |A|+1. c is
    /// ignored when x and y share a part.
    Graph amalgam(Colour c) const;
};

/// A member realized in the amalgam when xy gets `colour`; `image[k]` is the
/// amalgam vertex for the k-th part of `member`.
struct Blocker {
    Colour colour = 0;
    Monic member;
    std::vector<int> image;
};

struct EdgeCompletion {
    enum class Kind { no_edge_needed, coloured, blocked };
    Kind kind = Kind::no_edge_needed;
    Colour colour = kNoColour;
    std::vector<Blocker> blockers;  // one per colour when blocked
};

/// Least colour for xy keeping the amalgam free.
EdgeCompletion complete_edge(const Diagram& d, const Family& f);

struct FailWitness {
    Diagram diagram;
    std::vector<Blocker> blockers;
};

/// Re-executes a witness: B1 and B2 free, and each blocker really embeds in
/// the amalgam with its colour, covering every colour of the pair.
bool replay(const FailWitness& w, const Family& f);

enum class OracleStatus { pass, fail, inconclusive };
std::string to_string(OracleStatus s);

struct OracleOptions {
    int max_base = 6;
    /// Cap on (base, x, y) combinations examined before giving up.
    std::uint64_t budget = 200'000'000;
    int threads = 1;
};

struct OracleVerdict {
    OracleStatus status = OracleStatus::pass;
    int max_base = 0;
    int completeness_bound = 0;  // N = m g
    /// Largest |C_pq| (m-2): a failing diagram never needs a bigger base,
    /// since its blockers use at most m-2 base vertices per colour.
    int sufficient_bound = 0;
    /// max_base reaches the sufficient bound, so a pass is final.
    bool complete = false;
    std::optional<FailWitness> witness;
    std::uint64_t bases = 0;
    std::uint64_t diagrams = 0;
    std::string note;
};

/// Searches for a failing two-point diagram with base size at most
/// opts.max_base. For each pair {p,q} the bases range over free graphs on
/// the parts other than p and q, deduplicated with parts fixed; every
/// failing diagram restricts to one of these. x ranges over free
/// extensions into p and y over free extensions into q.
OracleVerdict bruteforce_check(const Family& f, const OracleOptions& opts = {});

/// Default bound min(N, 6).
int default_max_base(const Language& lang);

/// Overlay search: one blocker per colour of C_ij, i-vertices identified to
/// x and j-vertices to y, remaining vertices merged within parts (coarsest
/// first) and free edges coloured in order. First overlay with B1 and B2
/// free, or nothing.
std::optional<FailWitness> witness_search(const Family& f, int i, int j);

}  // namespace homog
