#pragma once

#include "homog/canon.hpp"
#include "homog/checker.hpp"
#include "homog/family.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace homog {

/// Every monic over lang on at least three parts (only three with
/// triangles_only), sorted.
std::vector<Monic> monic_pool(const Language& lang, bool triangles_only);

/// Pool monics that are not members and are pairwise non-embeddable with
/// every member, so that f with one of them added is still valid.
std::vector<Monic> valid_extensions(const Family& f, bool triangles_only = false);

/// Colour isomorphisms mapping f onto itself.
std::vector<ColourIsomorphism> family_automorphisms(const Family& f);

struct ExtensionClass {
    Monic added;              // representative monic
    Family family;            // f with it added
    std::size_t orbit = 0;    // valid extension monics in the class
};

struct ExtensionClasses {
    std::vector<ExtensionClass> classes;
    std::size_t valid_extensions = 0;
    /// False when the merge beyond automorphism orbits was skipped because
    /// canonical forms were too costly; classes are then orbits of Aut(f).
    bool merged_by_canonical_form = true;
};

/// One-monic valid extensions of f up to colour isomorphism of the
/// extended family.
ExtensionClasses extension_classes(const Family& f, bool triangles_only = false);

/// First valid one-monic extension (pool order) that passes classify.
std::optional<Monic> passing_extension(const Family& f, bool triangles_only = false);
bool is_maximal(const Family& f, bool triangles_only = false);

struct EnumerateOptions {
    bool triangles_only = true;
    bool maximal_only = false;
    /// Largest family size explored; 0 means no limit.
    int max_members = 0;
    /// Candidate families (class plus one monic) canonicalized before the
    /// search stops with a partial result; finished levels stay complete.
    std::uint64_t budget = 5'000'000;
    int threads = 1;
};

struct EnumeratedFamily {
    Family family;
    CanonicalForm form;
    Verdict verdict;
    /// Known when maximality was tested: empty means maximal.
    std::optional<Monic> passing_extension;
    bool maximality_tested = false;
};

struct Census {
    std::vector<EnumeratedFamily> families;  // emitted, level by level in form order
    std::vector<EnumeratedFamily> pruned;    // passing but not maximal (maximal_only)
    std::uint64_t classes_examined = 0;      // valid families up to isomorphism
    std::uint64_t candidates = 0;            // families canonicalized
    std::uint64_t failing = 0;
    int complete_levels = 0;                 // sizes 0..complete_levels-1 are exhaustive
    bool partial = false;
    std::string partial_reason;
};

/// Valid families over lang (members from the pool) up to colour
/// isomorphism, level by level in member count; emits those passing
/// classify. `sink` sees each emitted family as soon as its level is merged.
/// Throws std::invalid_argument if lang has fewer than three parts.
Census enumerate_valid_families(const Language& lang, const EnumerateOptions& opts,
                                const std::function<void(const EnumeratedFamily&)>& sink = {});

}  // namespace homog
