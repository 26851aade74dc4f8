#include "fixtures.hpp"
#include "gcssa_checks.hpp"

#include "homog/checker.hpp"
#include "homog/enumerate.hpp"
#include "homog/fraisse.hpp"
#include "homog/oracle.hpp"

#include <chrono>
#include <iomanip>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace homog;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
};

/// Every m=4 family touched by criteria 2-7, for the decider consistency check.
std::vector<Family> quadripartite_seen;

void seen(const Family& f) {
    if (f.part_count() == 4) quadripartite_seen.push_back(f);
}

std::string fmt_code(const Code& c, const Language& lang) { return format_code(c, lang); }

std::map<std::string, Monic> labelled(const std::shared_ptr<const Language>& lang, const std::string& name) {
    auto file = parse_family_file(read_file(fixtures::data_path("families/" + name + ".fam")), *lang);
    std::map<std::string, Monic> out;
    for (std::size_t k = 0; k < file.members.size(); ++k) out.emplace(file.labels[k], file.members[k]);
    return out;
}

bool oracle_pass(const Family& f, int max_base) {
    OracleOptions o;
    o.max_base = max_base;
    return bruteforce_check(f, o).status == OracleStatus::pass;
}

Result criterion1() {
    auto lang = fixtures::language("m3c3");
    std::vector<Monic> pool;
    for (const Monic& a : monic_pool(*lang, true)) {
        auto cs = a.colours();
        if (std::find(cs.begin(), cs.end(), Colour(0)) == cs.end()) pool.push_back(a);
    }
    Result r;
    int passed = 0, agree = 0;
    for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
        std::vector<Monic> ms;
        for (std::size_t b = 0; b < pool.size(); ++b)
            if (mask >> b & 1) ms.push_back(pool[b]);
        Family f(lang, ms);
        const bool p = check_tripartite(f).passed();
        passed += p;
        agree += p == oracle_pass(f, 4);
    }
    r.pass = pool.size() == 8 && passed == 256 && agree == 256;
    r.detail = "pool=" + std::to_string(pool.size()) + " pass=" + std::to_string(passed) + "/256 oracle_agree=" +
               std::to_string(agree) + "/256";
    return r;
}

Result criterion2() {
    auto lang = fixtures::language("m4c3");
    auto f1 = fixtures::family(lang, "f1");
    seen(f1);
    auto v = classify(f1);
    Result r;
    const Code want = make_code(0, 1, 2, 3, 0, 0, 0, 0);
    const bool census_ok = v.census.size() == 1 && v.census.front().code == want;
    const bool oracle = oracle_pass(f1, 5);
    r.pass = v.passed() && census_ok && oracle;
    r.detail = "classify=" + to_string(v.status) + " census_pairs=" + std::to_string(v.census.size()) +
               (v.census.empty() ? "" : " code=" + fmt_code(v.census.front().code, *lang)) +
               " oracle5=" + (oracle ? "PASS" : "FAIL");
    return r;
}

Result criterion3() {
    auto lang = fixtures::language("m4c3");
    auto f1 = fixtures::family(lang, "f1");
    auto named = labelled(lang, "f1_plus_additions");
    const std::vector<Monic> extra{named.at("A7"), named.at("A8"), named.at("AS")};
    int passed = 0;
    for (unsigned mask = 0; mask < 8; ++mask) {
        Family f = f1;
        for (int b = 0; b < 3; ++b)
            if (mask >> b & 1) f = f.with(extra[b]);
        seen(f);
        passed += classify(f).passed();
    }
    return {passed == 8, "pass=" + std::to_string(passed) + "/8"};
}

using MemberSet = std::set<Monic>;

Result criterion4() {
    auto lang = fixtures::language("m4c3");
    auto f2 = fixtures::family(lang, "f2");
    seen(f2);
    auto named = labelled(lang, "f2");
    auto set_of = [&](std::initializer_list<const char*> names) {
        MemberSet s;
        for (auto n : names) s.insert(named.at(n));
        return s;
    };
    const std::set<std::set<MemberSet>> want{
        {set_of({"A1", "B1", "A2", "C1"}), set_of({"A3", "B6", "A4", "C6"})},
        {set_of({"A1", "B2", "A3", "C2"}), set_of({"A2", "B5", "A4", "C5"})},
        {set_of({"A1", "B3", "A4", "C4"}), set_of({"A2", "B4", "A3", "C3"})},
    };
    auto v = classify(f2);
    std::set<std::set<MemberSet>> got;
    for (const auto& p : omission_pair_census(f2))
        got.insert({MemberSet(p.forward.members.begin(), p.forward.members.end()),
                    MemberSet(p.backward.members.begin(), p.backward.members.end())});
    auto ec = extension_classes(f2);
    int failing = 0;
    for (const auto& c : ec.classes) {
        seen(c.family);
        failing += !classify(c.family).passed();
    }
    Result r;
    r.pass = v.passed() && got == want && ec.merged_by_canonical_form && !ec.classes.empty() &&
             failing == static_cast<int>(ec.classes.size());
    r.detail = "classify=" + to_string(v.status) + " census_pairs=" + std::to_string(got.size()) +
               " alignments_match=" + (got == want ? "yes" : "no") + " valid_extensions=" +
               std::to_string(ec.valid_extensions) + " classes=" + std::to_string(ec.classes.size()) +
               " failing=" + std::to_string(failing);
    return r;
}

Result criterion5() {
    auto lang = fixtures::language("m4c3");
    auto f3 = fixtures::family(lang, "f3");
    seen(f3);
    auto v = classify(f3);
    std::set<Code> want;
    for (int x = 0; x < 16; ++x) {
        auto pick = [&](int b) { return Colour(x >> b & 1 ? 2 : 0); };
        want.insert(make_code(0, 1, 2, 3, pick(0), pick(1), pick(2), pick(3)));
    }
    std::set<Code> got;
    const auto census = omission_pair_census(f3);
    for (const auto& p : census) got.insert(p.code);
    std::string covered;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (enumerate_cover_sets(f3, i, j).next()) covered += (covered.empty() ? "" : ",") + std::to_string(i) + std::to_string(j);
    Result r;
    r.pass = v.passed() && census.size() == 16 && got == want && covered == "01,23";
    r.detail = "classify=" + to_string(v.status) + " census_pairs=" + std::to_string(census.size()) +
               " codes_match=" + (got == want ? "yes" : "no") + " cover_pairs=" + covered;
    return r;
}

Result criterion6() {
    auto lang = fixtures::language("m4c3");
    auto f = fixtures::family(lang, "f1_minus_a4");
    seen(f);
    auto v = classify(f);
    const Code want = make_code(0, 1, 2, 3, 0, 0, 0, 0);
    const bool cond = v.status == Status::fail && v.condition == Condition::correspondence && v.code &&
                      (*v.code == want || *v.code == swapped(want));
    bool replays = false;
    for (int i = 0; i < 4 && !replays; ++i)
        for (int j = i + 1; j < 4 && !replays; ++j)
            if (auto w = witness_search(f, i, j)) replays = replay(*w, f);
    OracleOptions o3;
    o3.max_base = 3;
    const bool oracle_fails = bruteforce_check(f, o3).status == OracleStatus::fail;
    Result r;
    r.pass = cond && replays && oracle_fails;
    r.detail = "classify=" + to_string(v.status) + " condition=" + to_string(v.condition) +
               (v.code ? " code=" + fmt_code(*v.code, *lang) : "") + " witness_replays=" + (replays ? "yes" : "no") +
               " oracle3=" + (oracle_fails ? "FAIL" : "PASS");
    return r;
}

Result criterion7() {
    Result r;
    int disagreements = 0;
    std::ostringstream first;
    auto compare = [&](const Family& f, int max_base) {
        const bool c = classify(f).passed();
        const bool o = oracle_pass(f, max_base);
        if (c != o) {
            if (!disagreements) first << " first_disagreement=" << serialize_family(f);
            ++disagreements;
        }
        return c;
    };
    auto m3 = fixtures::language("m3c2");
    const int n3 = default_max_base(*m3);
    auto pool = monic_pool(*m3, true);
    int lattice = 0, lattice_pass = 0;
    for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
        std::vector<Monic> ms;
        for (std::size_t b = 0; b < pool.size(); ++b)
            if (mask >> b & 1) ms.push_back(pool[b]);
        Family f(m3, ms);
        if (!validate_family(f).ok()) continue;
        ++lattice;
        lattice_pass += compare(f, n3);
    }

    auto m4 = fixtures::language("m4c3");
    std::mt19937_64 rng(7);
    std::vector<Family> sample;
    auto tri = monic_pool(*m4, true);
    for (int t = 0; t < 80; ++t) {
        const unsigned density = 6 + t % 20;
        std::vector<Monic> ms;
        for (const auto& a : tri)
            if (rng() % density == 0) ms.push_back(a);
        sample.emplace_back(m4, ms);
    }
    const std::vector<Family> bases{fixtures::family(m4, "f1"), fixtures::family(m4, "f1_plus_additions"),
                                    fixtures::family(m4, "f2"), fixtures::family(m4, "f3"),
                                    fixtures::family(m4, "no_cover")};
    auto grown = gcssa_checks::random_passing(bases, 80, rng, 4);
    for (const auto& f : grown) {
        sample.push_back(f);
        auto victim = f.members()[rng() % f.size()];
        sample.push_back(f.without(victim));
    }
    int m4_count = 0, m4_pass = 0;
    for (const auto& f : sample) {
        if (!validate_family(f).ok()) continue;
        ++m4_count;
        seen(f);
        m4_pass += compare(f, 5);
    }
    r.pass = disagreements == 0 && m4_count >= 200 && lattice == 256;
    r.detail = "m3c2_lattice=" + std::to_string(lattice) + " (pass " + std::to_string(lattice_pass) + ", max_base " +
               std::to_string(n3) + ") m4_sampled=" + std::to_string(m4_count) + " (pass " + std::to_string(m4_pass) +
               ", max_base 5) disagreements=" + std::to_string(disagreements) + first.str();
    return r;
}

Result criterion8() {
    using namespace gcssa_checks;
    auto m4 = fixtures::language("m4c3");
    auto m5 = fixtures::language("m5c3");
    std::vector<Instance> inst;
    const std::vector<Family> bases{fixtures::family(m4, "f1"), fixtures::family(m4, "f1_plus_additions"),
                                    fixtures::family(m4, "f2"), fixtures::family(m4, "f3")};
    for (const auto& f : bases) add_instances(f, inst, 150);
    add_instances(fixtures::family(m5, "m5_star"), inst, 150);
    std::mt19937_64 rng(8);
    for (const auto& f : random_passing(bases, 60, rng)) add_instances(f, inst, 20);
    int violations = 0, good = 0, reduced = 0;
    std::string first;
    for (const auto& x : inst) {
        auto out = gcssa_run(x.cover, x.family, x.gamma0);
        auto bad = outcome_violations(out, x.cover, x.family);
        if (!bad.empty() && first.empty()) first = " first_violation=" + bad.front();
        violations += !bad.empty();
        good += out.kind == GcssaKind::good;
        reduced += out.kind == GcssaKind::reduced;
    }
    Result r;
    r.pass = inst.size() >= 1000 && violations == 0;
    r.detail = "instances=" + std::to_string(inst.size()) + " good=" + std::to_string(good) + " reduced=" +
               std::to_string(reduced) + " violations=" + std::to_string(violations) + first;
    return r;
}

Result criterion9() {
    auto lang = fixtures::language("m4c3");
    auto f1 = fixtures::family(lang, "f1");
    BuildConfig cfg;
    cfg.n = 150;
    cfg.s = 3;
    auto rep = build_generic(f1, cfg);
    auto s = sample_homogeneity(rep.graph, 3, 500, cfg.seed);
    const double rate = s.rate.value_or(0);
    Result r;
    r.pass = rep.graph.size() == 150 && rep.audit.omits_family() && rep.audit.realizes_all() && rate >= 0.95;
    std::ostringstream d;
    d << "seed=" << cfg.seed << " forbidden=" << rep.audit.forbidden.size() << " missing=" << rep.audit.missing.size()
      << "/" << rep.audit.free_types << " rate=" << rate << " (" << s.successes << "/" << s.trials << ")";
    r.detail = d.str();
    return r;
}

Result criterion10() {
    int disagreements = 0;
    for (const auto& f : quadripartite_seen) {
        if (!validate_family(f).ok()) continue;
        auto a = check_quadripartite(f);
        auto b = check_mgeneric(f);
        disagreements += a.status != b.status || a.condition != b.condition;
    }
    return {disagreements == 0 && !quadripartite_seen.empty(),
            "families=" + std::to_string(quadripartite_seen.size()) + " disagreements=" + std::to_string(disagreements)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Result()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                        criterion6, criterion7, criterion8, criterion9, criterion10};
    std::set<int> only;
    for (int a = 1; a < argc; ++a) only.insert(std::atoi(argv[a]));
    if (only.count(10))
        for (int dep = 2; dep <= 7; ++dep)
            if (!only.count(dep)) criteria[dep - 1]();
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const int id = static_cast<int>(k) + 1;
        if (!only.empty() && !only.count(id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[k]();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !r.pass;
        std::cout << "criterion " << id << ": " << (r.pass ? "PASS" : "FAIL") << " " << r.detail << " ["
                  << std::fixed << std::setprecision(1) << secs << "s]" << std::defaultfloat << std::endl;
    }
    return failed ? 1 : 0;
}
