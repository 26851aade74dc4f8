#pragma once

#include "homog/canon.hpp"
#include "homog/graph.hpp"
#include "homog/monic.hpp"

#include <memory>
#include <vector>

namespace homog {

/// A candidate set of forbidden monics over one language. Members are kept
/// sorted; duplicates are retained so that validation can report them.
class Family {
public:
    Family(std::shared_ptr<const Language> lang, std::vector<Monic> members);
    Family(const Language& lang, std::vector<Monic> members);

    const Language& language() const { return *lang_; }
    const std::shared_ptr<const Language>& language_ptr() const { return lang_; }
    int part_count() const { return lang_->parts(); }

    const std::vector<Monic>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(const Monic& a) const;

    Family with(const Monic& a) const;
    Family without(const Monic& a) const;

    /// Members defined on both i and j, in member order.
    std::vector<Monic> members_on(int i, int j) const;

    friend bool operator==(const Family& a, const Family& b) {
        return *a.lang_ == *b.lang_ && a.members_ == b.members_;
    }

private:
    std::shared_ptr<const Language> lang_;
    std::vector<Monic> members_;
};

/// Members monic over the language, on at least three parts, pairwise
/// non-embeddable and distinct.
ValidationReport validate_family(const Family& f);

/// Variant for raw graphs: non-monic members are reported, the rest are
/// validated as a family.
ValidationReport validate_family(const Language& lang, const std::vector<Graph>& members);

/// No member embeds in h.
bool is_free(const Graph& h, const Family& f);
bool is_free(const Monic& h, const Family& f);

/// h is not free but every proper induced subgraph is.
bool minimally_omitted(const Graph& h, const Family& f);

/// Every monic subgraph of h is free.
bool realized_by_monic_criterion(const Graph& h, const Family& f);

/// Minimum over profile-preserving part bijections and all per-pair colour
/// bijections of the sorted member encodings. Throws std::length_error if
/// the transformation count is beyond reach.
CanonicalForm family_canonical_form(const Family& f);

Family apply(const ColourIsomorphism& iso, const Family& f);

}  // namespace homog
