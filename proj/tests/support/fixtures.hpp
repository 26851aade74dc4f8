#pragma once

#include "homog/family.hpp"
#include "homog/io.hpp"
#include "homog/language.hpp"

#include <memory>
#include <string>

namespace fixtures {

inline std::string data_path(const std::string& rel) { return std::string(HOMOG_DATA_DIR) + "/" + rel; }

inline std::shared_ptr<const homog::Language> language(const std::string& name) {
    return std::make_shared<const homog::Language>(
        homog::parse_language(homog::read_file(data_path("languages/" + name + ".lang"))));
}

inline homog::Family family(const std::shared_ptr<const homog::Language>& lang, const std::string& name) {
    auto file = homog::parse_family_file(homog::read_file(data_path("families/" + name + ".fam")), *lang);
    return homog::Family(lang, file.members);
}

inline homog::Monic monic(const homog::Language& lang, const std::string& text) {
    return homog::parse_monic(text, lang);
}

}  // namespace fixtures
