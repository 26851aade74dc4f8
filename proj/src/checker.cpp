#include "homog/checker.hpp"

#include <stdexcept>

namespace homog {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::invalid: return "INVALID";
    }
    return "?";
}

std::string to_string(Condition c) {
    switch (c) {
        case Condition::none: return "none";
        case Condition::tripartite_cover: return "tripartite-cover";
        case Condition::correspondence: return "correspondence";
        case Condition::based_on: return "based-on";
    }
    return "?";
}

Verdict check_tripartite(const Family& f) {
    if (f.part_count() != 3) throw std::invalid_argument("check_tripartite needs a 3-part language");
    Verdict v;
    v.decider = "tripartite";
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            auto stream = enumerate_cover_sets(f, i, j);
            if (auto cover = stream.next()) {
                v.status = Status::fail;
                v.condition = Condition::tripartite_cover;
                v.pair = {i, j};
                v.cover = std::move(cover);
                return v;
            }
        }
    return v;
}

namespace {

Verdict check_conditions(const Family& f, const CheckOptions& opts, const char* name) {
    const auto& lang = f.language();
    const int m = lang.parts();
    Verdict v;
    v.decider = name;

    for (const auto& code : candidate_codes(f)) {
        auto s = omission_set_with_code(f, code);
        if (!s || !s->both_types()) continue;
        if (!corresponding_exists(f, *s)) {
            v.status = Status::fail;
            v.condition = Condition::correspondence;
            v.pair = {code.i(), code.j()};
            v.code = code;
            v.omission = *s;
            return v;
        }
    }

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto stream = enumerate_cover_sets(f, i, j);
            while (auto cover = stream.next()) {
                auto hit = based_on_triangles(f, *cover);
                if (opts.loose_based_on) {
                    auto loose = based_on_codes(f, *cover);
                    if (loose.has_value() != hit.has_value())
                        v.findings.push_back(
                            "based-on forms disagree on cover set " + format_cover_set(*cover, lang) +
                            ": triangle form " + (hit ? "found " + format_code(hit->code, lang) : "none") +
                            ", code form " + (loose ? "found " + format_code(loose->code, lang) : "none"));
                }
                if (!hit) {
                    v.status = Status::fail;
                    v.condition = Condition::based_on;
                    v.pair = {i, j};
                    v.cover = *cover;
                    return v;
                }
            }
        }

    v.census = omission_pair_census(f);
    for (const auto& p : v.census) {
        for (const Code& c : {p.code, swapped(p.code)})
            if (auto bad = agreeing_monic_violation(f, c))
                v.findings.push_back("member " + format_monic(*bad, lang) + " agrees with code " +
                                     format_code(c, lang));
    }
    return v;
}

}  // namespace

Verdict check_quadripartite(const Family& f, const CheckOptions& opts) {
    if (f.part_count() != 4)
        throw std::invalid_argument("check_quadripartite needs a 4-part language");
    const auto& lang = f.language();
    Verdict v;
    v.decider = "quadripartite";

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            int k = -1, l = -1;
            for (int p = 0; p < 4; ++p)
                if (p != i && p != j) (k < 0 ? k : l) = p;
            for (int a = 0; a < lang.colour_count(i, k); ++a)
                for (int b = 0; b < lang.colour_count(i, l); ++b)
                    for (int c = 0; c < lang.colour_count(j, k); ++c)
                        for (int d = 0; d < lang.colour_count(j, l); ++d) {
                            Code code{{i, j, k, l},
                                      {static_cast<Colour>(a), static_cast<Colour>(b),
                                       static_cast<Colour>(c), static_cast<Colour>(d)}};
                            auto s = omission_set_with_code(f, code);
                            if (!s || !s->both_types()) continue;
                            auto t = omission_set_with_code(f, swapped(code));
                            if (t && t->both_types()) continue;
                            v.status = Status::fail;
                            v.condition = Condition::correspondence;
                            v.pair = {i, j};
                            v.code = code;
                            v.omission = *s;
                            return v;
                        }
        }

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            int k = -1, l = -1;
            for (int p = 0; p < 4; ++p)
                if (p != i && p != j) (k < 0 ? k : l) = p;
            const PartMask ijk = (1u << i) | (1u << j) | (1u << k);
            const PartMask ijl = (1u << i) | (1u << j) | (1u << l);
            auto stream = enumerate_cover_sets(f, i, j);
            while (auto cover = stream.next()) {
                std::optional<Code> found;
                for (const auto& x : cover->by_colour) {
                    if (x.mask() != ijk) continue;
                    for (const auto& y : cover->by_colour) {
                        if (y.mask() != ijl) continue;
                        Code code{{i, j, k, l},
                                  {x.colour(i, k), y.colour(i, l), x.colour(j, k), y.colour(j, l)}};
                        auto s = omission_set_with_code(f, code);
                        if (s && s->both_types()) {
                            found = code;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (opts.loose_based_on) {
                    auto loose = based_on_codes(f, *cover);
                    if (loose.has_value() != found.has_value())
                        v.findings.push_back(
                            "based-on forms disagree on cover set " + format_cover_set(*cover, lang) +
                            ": triangle form " + (found ? "found " + format_code(*found, lang) : "none") +
                            ", code form " + (loose ? "found " + format_code(loose->code, lang) : "none"));
                }
                if (!found) {
                    v.status = Status::fail;
                    v.condition = Condition::based_on;
                    v.pair = {i, j};
                    v.cover = *cover;
                    return v;
                }
            }
        }

    v.census = omission_pair_census(f);
    return v;
}

Verdict check_mgeneric(const Family& f, const CheckOptions& opts) {
    if (f.part_count() < 3) throw std::invalid_argument("check_mgeneric needs at least 3 parts");
    if (f.part_count() == 3) return check_tripartite(f);
    return check_conditions(f, opts, "mgeneric");
}

Verdict classify(const Family& f, const CheckOptions& opts) {
    Verdict v;
    v.validation = validate_family(f);
    if (!v.validation.ok()) {
        v.status = Status::invalid;
        v.decider = "validation";
        return v;
    }
    if (f.part_count() == 2) {
        v.decider = "bipartite";
        return v;
    }
    return check_mgeneric(f, opts);
}

}  // namespace homog
