#include "homog/language.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homog {

ValidationReport validate_language(const LanguageDescription& desc) {
    ValidationReport report;
    if (desc.parts < 2) {
        report.add("part count " + std::to_string(desc.parts) + " is below 2");
    }
    if (desc.parts > kMaxParts) {
        report.add("part count " + std::to_string(desc.parts) + " exceeds " +
                   std::to_string(kMaxParts));
        return report;
    }
    for (const auto& [pair, names] : desc.colours) {
        auto [i, j] = pair;
        if (i < 0 || j < 0 || i >= desc.parts || j >= desc.parts || i == j) {
            report.add("pair {" + std::to_string(i) + "," + std::to_string(j) +
                       "} is not a pair of distinct parts");
            continue;
        }
        if (i > j && desc.colours.count({j, i})) {
            report.add("pair {" + std::to_string(j) + "," + std::to_string(i) +
                       "} given twice");
        }
        if (names.empty()) {
            report.add("empty colour set on pair {" + std::to_string(std::min(i, j)) + "," +
                       std::to_string(std::max(i, j)) + "}");
        }
        if (names.size() >= kNoColour) {
            report.add("too many colours on pair {" + std::to_string(std::min(i, j)) + "," +
                       std::to_string(std::max(i, j)) + "}");
        }
        std::set<std::string> seen;
        for (const auto& n : names) {
            if (n.empty()) report.add("empty colour token");
            if (!seen.insert(n).second) {
                report.add("duplicate colour '" + n + "' on pair {" +
                           std::to_string(std::min(i, j)) + "," +
                           std::to_string(std::max(i, j)) + "}");
            }
        }
    }
    for (int i = 0; i < desc.parts; ++i) {
        for (int j = i + 1; j < desc.parts; ++j) {
            if (!desc.colours.count({i, j}) && !desc.colours.count({j, i})) {
                report.add("missing pair {" + std::to_string(i) + "," + std::to_string(j) + "}");
            }
        }
    }
    return report;
}

Language::Language(const LanguageDescription& desc) {
    auto report = validate_language(desc);
    if (!report.ok()) {
        std::string msg = "invalid language:";
        for (const auto& v : report.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    parts_ = desc.parts;
    pair_index_.assign(static_cast<std::size_t>(parts_ * parts_), -1);
    for (int i = 0; i < parts_; ++i) {
        for (int j = i + 1; j < parts_; ++j) {
            int idx = static_cast<int>(names_.size());
            pair_index_[i * parts_ + j] = idx;
            pair_index_[j * parts_ + i] = idx;
            auto it = desc.colours.find({i, j});
            if (it == desc.colours.end()) it = desc.colours.find({j, i});
            names_.push_back(it->second);
            max_colours_ = std::max(max_colours_, static_cast<int>(it->second.size()));
        }
    }
}

Language Language::uniform(int parts, const std::vector<std::string>& names) {
    LanguageDescription desc;
    desc.parts = parts;
    for (int i = 0; i < parts; ++i)
        for (int j = i + 1; j < parts; ++j) desc.colours[{i, j}] = names;
    return Language(desc);
}

std::optional<Colour> Language::find_colour(int i, int j, std::string_view name) const {
    const auto& names = names_[pair_index(i, j)];
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<Colour>(it - names.begin());
}

LanguageDescription Language::description() const {
    LanguageDescription desc;
    desc.parts = parts_;
    for (int i = 0; i < parts_; ++i)
        for (int j = i + 1; j < parts_; ++j) desc.colours[{i, j}] = names_[pair_index(i, j)];
    return desc;
}

}  // namespace homog
