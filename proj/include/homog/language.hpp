#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homog {

/// Colour index local to one pair of parts. Pairs have independent
/// namespaces: colour 0 on E_01 and colour 0 on E_23 are unrelated.
using Colour = std::uint8_t;
inline constexpr Colour kNoColour = 0xFF;

/// Upper bound on the number of parts; part sets are stored as bitmasks.
inline constexpr int kMaxParts = 32;

/// Human-editable language description, possibly malformed.
struct LanguageDescription {
    int parts = 0;
    std::map<std::pair<int, int>, std::vector<std::string>> colours;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string what) { violations.push_back(std::move(what)); }
};

ValidationReport validate_language(const LanguageDescription& desc);

/// A finite multipartite language: part count m and a colour set C_ij per
/// unordered pair of parts. Always valid once constructed.
class Language {
public:
    explicit Language(const LanguageDescription& desc);

    /// m parts, every pair sharing the same colour names.
    static Language uniform(int parts, const std::vector<std::string>& names);

    int parts() const { return parts_; }
    int pair_count() const { return static_cast<int>(names_.size()); }

    /// Index of the unordered pair {i,j}, lexicographic over i<j.
    int pair_index(int i, int j) const { return pair_index_[i * parts_ + j]; }

    int colour_count(int i, int j) const {
        return static_cast<int>(names_[pair_index(i, j)].size());
    }
    const std::string& colour_name(int i, int j, Colour c) const {
        return names_[pair_index(i, j)].at(c);
    }
    std::optional<Colour> find_colour(int i, int j, std::string_view name) const;

    /// g: the largest colour set.
    int max_colours() const { return max_colours_; }
    /// N = m * g, the completeness bound for two-point amalgamation bases.
    int completeness_bound() const { return parts_ * max_colours_; }

    LanguageDescription description() const;

    friend bool operator==(const Language& a, const Language& b) {
        return a.parts_ == b.parts_ && a.names_ == b.names_;
    }

private:
    int parts_ = 0;
    int max_colours_ = 0;
    std::vector<std::vector<std::string>> names_;
    std::vector<int> pair_index_;
};

}  // namespace homog
