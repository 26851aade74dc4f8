#pragma once

#include "homog/family.hpp"
#include "homog/omission.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homog {

enum class Status { pass, fail, invalid };

enum class Condition {
    none,
    tripartite_cover,  // some pair of a 3-part language has every colour covered
    correspondence,    // (i): a present omission set lacks its corresponding set
    based_on,          // (ii): a cover set has no omission set based on its triangles
};

std::string to_string(Status s);
std::string to_string(Condition c);

struct Verdict {
    Status status = Status::pass;
    Condition condition = Condition::none;
    std::string decider;
    std::optional<std::pair<int, int>> pair;
    std::optional<Code> code;
    std::optional<CoverSet> cover;
    std::optional<OmissionSet> omission;
    std::vector<CorrespondingPair> census;
    std::vector<std::string> findings;
    ValidationReport validation;

    bool passed() const { return status == Status::pass; }
};

struct CheckOptions {
    /// Also evaluate (ii) with codes based on any members, and record any
    /// disagreement with the triangle form as a finding.
    bool loose_based_on = false;
};

/// Throws std::invalid_argument unless the language has 3 parts.
Verdict check_tripartite(const Family& f);
/// Throws std::invalid_argument unless the language has 4 parts.
Verdict check_quadripartite(const Family& f, const CheckOptions& opts = {});
/// Dispatches to check_tripartite at m=3; throws for m<3.
Verdict check_mgeneric(const Family& f, const CheckOptions& opts = {});

/// Validates, then dispatches on the part count.
Verdict classify(const Family& f, const CheckOptions& opts = {});

}  // namespace homog
