#pragma once

#include "homog/family.hpp"
#include "homog/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homog {

enum class PartPolicy {
    round_robin,    // filler vertices cycle through the parts
    smallest_part,  // filler vertices go to the currently smallest part
};

struct BuildConfig {
    int n = 100;
    /// Demands are one-point extension types over vertex sets of at most s.
    int s = 2;
    std::uint64_t seed = 20240601;
    PartPolicy policy = PartPolicy::round_robin;
    /// Part bound for the realization audit run on the finished graph.
    int audit_parts_bound = 4;
};

struct ForbiddenHit {
    Monic member;
    std::vector<int> image;  // vertex per member part, in part order
};

struct AgeAudit {
    std::vector<ForbiddenHit> forbidden;  // members that embed
    std::vector<Monic> missing;           // free monics that do not embed
    std::uint64_t free_types = 0;         // free monics examined
    bool omits_family() const { return forbidden.empty(); }
    bool realizes_all() const { return missing.empty(); }
    bool ok() const { return omits_family() && realizes_all(); }
};

struct BuildReport {
    Graph graph;
    std::uint64_t demands_issued = 0;     // free (U, type) demands examined
    std::uint64_t demands_satisfied = 0;  // already realized or served by a new vertex
    std::uint64_t demand_vertices = 0;
    std::uint64_t filler_vertices = 0;
    std::vector<int> part_sizes;
    AgeAudit audit;
    std::vector<std::string> findings;
};

/// Grows a graph in Forb(f) by serving one-point extension demands over
/// vertex sets of size at most s in creation order. Edges outside the demand
/// set are coloured for the new vertex in a seeded random order, each taking a
/// random colour among those keeping the graph free. Throws
/// std::invalid_argument if f does not pass classify or cfg is out of range.
BuildReport build_generic(const Family& f, const BuildConfig& cfg);

/// Every member is absent from g, and every f-free monic on at most
/// parts_bound parts (and at least two) embeds in g.
AgeAudit audit_age(const Graph& g, const Family& f, int parts_bound);

struct HomogeneitySample {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::optional<double> rate;  // absent when trials == 0
    std::vector<std::string> failures;  // first few failures, human readable
};

/// Random partial isomorphisms of size 1..k (parts fixed, colours matched)
/// and a random new source vertex; counts how often an image for it exists.
HomogeneitySample sample_homogeneity(const Graph& g, int k, std::uint64_t trials, std::uint64_t seed);

}  // namespace homog
