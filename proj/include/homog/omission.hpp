#pragma once

#include "homog/family.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace homog {

/// (i,j,k,l; c_ik, c_il, c_jk, c_jl) with i<j and k<l.
struct Code {
    std::array<int, 4> parts{};
    std::array<Colour, 4> colours{};

    int i() const { return parts[0]; }
    int j() const { return parts[1]; }
    int k() const { return parts[2]; }
    int l() const { return parts[3]; }
    Colour c_ik() const { return colours[0]; }
    Colour c_il() const { return colours[1]; }
    Colour c_jk() const { return colours[2]; }
    Colour c_jl() const { return colours[3]; }

    friend auto operator<=>(const Code&, const Code&) = default;
};

/// Builds a code from any ordering of the two pairs; normalizes to i<j,
/// k<l. Throws std::invalid_argument unless the four parts are distinct.
Code make_code(int i, int j, int k, int l, Colour c_ik, Colour c_il, Colour c_jk, Colour c_jl);

/// The code of the corresponding problem on {k,l}: (k,l,i,j; c_ik,c_jk,c_il,c_jl).
Code swapped(const Code& code);

ValidationReport validate_code(const Code& code, const Language& lang);
std::string format_code(const Code& code, const Language& lang);

/// T_k^c (third == code.k()) or T_l^c (third == code.l()).
Monic code_triangle(const Code& code, int third, Colour c, int part_count);

struct OmissionSet {
    Code code;
    std::vector<Monic> members;  // present agreeing triangles, sorted
    bool has_k_type = false;
    bool has_l_type = false;

    bool both_types() const { return has_k_type && has_l_type; }
};

/// A cover set on {i,j} with exactly one member per colour of C_ij.
struct CoverSet {
    int i = 0;
    int j = 1;
    std::vector<Monic> by_colour;

    const Monic& member(Colour c) const { return by_colour.at(c); }
    friend bool operator==(const CoverSet&, const CoverSet&) = default;
};

std::string format_cover_set(const CoverSet& a, const Language& lang);

/// Members of f per colour of C_ij, each defined on i and j.
std::vector<std::vector<Monic>> cover_candidates(const Family& f, int i, int j);

/// Lazy mixed-radix walk over all one-per-colour selections.
class CoverSetStream {
public:
    CoverSetStream(int i, int j, std::vector<std::vector<Monic>> candidates);

    std::optional<CoverSet> next();
    /// Product of per-colour counts, saturated at UINT64_MAX.
    std::uint64_t total() const { return total_; }

private:
    int i_, j_;
    std::vector<std::vector<Monic>> candidates_;
    std::vector<std::size_t> digits_;
    bool done_ = false;
    std::uint64_t total_ = 0;
};

CoverSetStream enumerate_cover_sets(const Family& f, int i, int j);

/// Omega_ij(a): every code whose k-side colours come from a member on
/// {i,j,k} and whose l-side colours come from a member on {i,j,l}.
std::set<Code> codes_based_on(const CoverSet& a, int part_count);

std::optional<OmissionSet> omission_set_with_code(const Family& f, const Code& code);

/// Presence of an omission set with the swapped code, both types required.
bool corresponding_exists(const Family& f, const OmissionSet& s);

struct BasedOnHit {
    Code code;
    OmissionSet omission;
    Monic k_side;  // supplier of (c_ik, c_jk)
    Monic l_side;  // supplier of (c_il, c_jl)
};

/// First code induced by an ijk-triangle and an ijl-triangle of a whose
/// omission set is present in f with both triangle types.
std::optional<BasedOnHit> based_on_triangles(const Family& f, const CoverSet& a);

/// Looser form: any code of Omega_ij(a) with a present omission set of both
/// types.
std::optional<BasedOnHit> based_on_codes(const Family& f, const CoverSet& a);

/// A member on all four code parts agreeing with the code's side edges.
std::optional<Monic> agreeing_monic_violation(const Family& f, const Code& code);

struct CorrespondingPair {
    Code code;  // the orientation with the smaller pair first
    OmissionSet forward;
    OmissionSet backward;
};

/// All present omission sets (both types) whose corresponding set is also
/// present, one entry per unordered code/swapped-code pair.
std::vector<CorrespondingPair> omission_pair_census(const Family& f);

/// Codes arising from pairs of f-triangles on {i,j,k} and {i,j,l}.
std::set<Code> candidate_codes(const Family& f);

}  // namespace homog
