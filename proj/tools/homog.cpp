#include "homog/canon.hpp"
#include "homog/checker.hpp"
#include "homog/enumerate.hpp"
#include "homog/fraisse.hpp"
#include "homog/gcssa.hpp"
#include "homog/io.hpp"
#include "homog/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

using namespace homog;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInconclusive = 3;

struct Inputs {
    std::string language;
    std::string family;
    std::string graph;
    int threads = 1;
};

struct Loaded {
    std::shared_ptr<const Language> lang;
    std::optional<Family> family;
    std::vector<Monic> listed;  // file order, parallel to labels
    std::vector<std::string> labels;
};

std::shared_ptr<const Language> load_language(const std::string& path) {
    return std::make_shared<const Language>(parse_language(read_file(path)));
}

Loaded load(const Inputs& in, bool need_family) {
    Loaded out;
    out.lang = load_language(in.language);
    if (need_family) {
        auto file = parse_family_file(read_file(in.family), *out.lang);
        out.family.emplace(out.lang, file.members);
        out.listed = file.members;
        for (std::size_t k = 0; k < file.members.size(); ++k)
            out.labels.push_back(k < file.labels.size() ? file.labels[k] : "");
    }
    return out;
}

int default_threads() {
    if (const char* e = std::getenv("HOMOG_THREADS")) {
        int t = std::atoi(e);
        if (t > 0) return t;
    }
    return 1;
}

void print_report(const ValidationReport& r, const std::string& what) {
    std::cout << what << "_valid=" << (r.ok() ? "true" : "false") << "\n";
    for (const auto& v : r.violations) std::cout << what << "_violation=" << v << "\n";
}

std::string status_word(Status s) { return s == Status::pass ? "PASS" : s == Status::fail ? "FAIL" : "INVALID"; }

void print_census(const std::vector<CorrespondingPair>& census, const Language& lang) {
    std::cout << "census_pairs=" << census.size() << "\n";
    for (const auto& p : census) {
        std::cout << "census_code=" << format_code(p.code, lang) << " forward=";
        for (std::size_t k = 0; k < p.forward.members.size(); ++k)
            std::cout << (k ? "," : "") << format_monic(p.forward.members[k], lang);
        std::cout << " backward=";
        for (std::size_t k = 0; k < p.backward.members.size(); ++k)
            std::cout << (k ? "," : "") << format_monic(p.backward.members[k], lang);
        std::cout << "\n";
    }
}

void print_verdict(const Verdict& v, const Language& lang) {
    std::cout << "status=" << status_word(v.status) << "\n";
    std::cout << "decider=" << v.decider << "\n";
    std::cout << "condition=" << to_string(v.condition) << "\n";
    if (v.pair) std::cout << "pair=" << v.pair->first << v.pair->second << "\n";
    if (v.code) std::cout << "code=" << format_code(*v.code, lang) << "\n";
    if (v.cover) std::cout << "cover=" << format_cover_set(*v.cover, lang) << "\n";
    if (v.omission) {
        std::cout << "omission_code=" << format_code(v.omission->code, lang) << "\n";
        for (const auto& a : v.omission->members) std::cout << "omission_member=" << format_monic(a, lang) << "\n";
    }
    print_census(v.census, lang);
    for (const auto& f : v.findings) std::cout << "finding=" << f << "\n";
    for (const auto& x : v.validation.violations) std::cout << "violation=" << x << "\n";
}

void print_witness(const FailWitness& w, const Language& lang) {
    const auto& d = w.diagram;
    std::cout << "witness_base_size=" << d.base.size() << "\n";
    std::istringstream base(serialize_graph(d.base, lang));
    for (std::string line; std::getline(base, line);) std::cout << "witness_base=" << line << "\n";
    auto colours = [&](int part, const std::vector<Colour>& cs) {
        std::string s;
        for (int v = 0; v < d.base.size(); ++v) {
            if (!s.empty()) s += ",";
            s += cs[v] == kNoColour ? "-" : lang.colour_name(part, d.base.part(v), cs[v]);
        }
        return s;
    };
    std::cout << "witness_x_part=" << d.x_part << " colours=" << colours(d.x_part, d.x_colours) << "\n";
    std::cout << "witness_y_part=" << d.y_part << " colours=" << colours(d.y_part, d.y_colours) << "\n";
    for (const auto& b : w.blockers) {
        std::cout << "blocker colour=" << lang.colour_name(d.x_part, d.y_part, b.colour)
                  << " member=" << format_monic(b.member, lang) << " image=";
        for (std::size_t k = 0; k < b.image.size(); ++k) std::cout << (k ? "," : "") << b.image[k];
        std::cout << "\n";
    }
}

std::string colour_list(const std::vector<Colour>& cs, const Language& lang, int i, int j) {
    std::string s;
    for (Colour c : cs) s += (s.empty() ? "" : ",") + lang.colour_name(i, j, c);
    return s.empty() ? "-" : s;
}

void print_outcome(const GcssaOutcome& out, const Language& lang, const std::string& prefix) {
    const int i = out.cover.i, j = out.cover.j;
    std::cout << prefix << "outcome=" << to_string(out.kind) << "\n";
    std::cout << prefix << "cover=" << format_cover_set(out.cover, lang) << "\n";
    if (out.key) std::cout << prefix << "key=" << lang.colour_name(i, j, *out.key) << "\n";
    if (!out.note.empty()) std::cout << prefix << "note=" << out.note << "\n";
    for (const auto& st : out.trace) {
        std::cout << prefix << "step=" << st.step << " gamma=" << lang.colour_name(i, j, st.gamma)
                  << " delta=" << colour_list(st.delta, lang, i, j);
        if (st.replacement_colour) std::cout << " delta_colour=" << lang.colour_name(i, j, *st.replacement_colour);
        if (st.replacement)
            std::cout << " replacement=" << format_monic(*st.replacement, lang)
                      << " good=" << (st.good_replacement ? "true" : "false");
        std::cout << " cover=" << format_cover_set(st.cover, lang) << "\n";
    }
}

Colour parse_colour(const std::string& tok, const Language& lang, int i, int j) {
    if (auto c = lang.find_colour(i, j, tok)) return *c;
    if (tok.size() > 1 && tok[0] == 'c' && std::all_of(tok.begin() + 1, tok.end(), ::isdigit)) {
        int c = std::stoi(tok.substr(1));
        if (c < lang.colour_count(i, j)) return static_cast<Colour>(c);
    }
    throw std::invalid_argument("unknown colour '" + tok + "' on pair " + std::to_string(i) + std::to_string(j));
}

Monic member_by_name(const std::string& name, const Loaded& l) {
    for (std::size_t k = 0; k < l.labels.size(); ++k)
        if (l.labels[k] == name) return l.listed[k];
    if (!name.empty() && name.front() == '[') return parse_monic(name, *l.lang);
    throw std::invalid_argument("no family member labelled '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide and explore omission families of homogeneous coloured multipartite graphs"};
    app.require_subcommand(1);
    Inputs in;
    in.threads = default_threads();

    auto add_lang = [&](CLI::App* s) { s->add_option("-l,--language", in.language, "language file")->required(); };
    auto add_family = [&](CLI::App* s) { s->add_option("-f,--family", in.family, "family file")->required(); };
    auto add_threads = [&](CLI::App* s) {
        s->add_option("--threads", in.threads, "worker threads (default HOMOG_THREADS or 1)")->check(CLI::PositiveNumber);
    };

    auto* validate = app.add_subcommand("validate", "validate a language, family, or graph");
    add_lang(validate);
    validate->add_option("-f,--family", in.family, "family file");
    validate->add_option("-g,--graph", in.graph, "graph export");

    auto* check = app.add_subcommand("check", "classify verdict; exit 0 PASS, 1 FAIL, 2 invalid");
    add_lang(check);
    add_family(check);
    bool loose = false;
    check->add_flag("--loose-based-on", loose, "also test (ii) with codes based on any members");

    auto* oracle = app.add_subcommand("oracle", "brute-force amalgamation check; exit 0, 1, or 3 inconclusive");
    add_lang(oracle);
    add_family(oracle);
    int max_base = -1;
    std::uint64_t oracle_budget = OracleOptions{}.budget;
    oracle->add_option("--max-base", max_base, "largest base size (default: completeness bound)");
    oracle->add_option("--budget", oracle_budget, "diagram budget");
    add_threads(oracle);

    auto* witness = app.add_subcommand("witness", "targeted failing-diagram search on one pair");
    add_lang(witness);
    add_family(witness);
    std::vector<int> pair;
    witness->add_option("--pair", pair, "parts i j")->expected(2)->required();

    auto* gcssa = app.add_subcommand("gcssa", "run the good cover set search from a cover set");
    add_lang(gcssa);
    add_family(gcssa);
    std::vector<int> gpair;
    std::vector<std::string> cover_args;
    std::string gamma0;
    std::string find;
    gcssa->add_option("--pair", gpair, "parts i j")->expected(2)->required();
    gcssa->add_option("--cover", cover_args, "COLOUR=NAME per colour (label or bracket monic)")->required();
    gcssa->add_option("--gamma0", gamma0, "starting test colour");
    gcssa->add_option("--find", find, "iterate to a good or star cover set")->check(CLI::IsMember({"good", "star"}));

    auto* build = app.add_subcommand("build", "finite approximation of the generic graph");
    add_lang(build);
    add_family(build);
    BuildConfig cfg;
    std::string out_path;
    std::string policy = "round-robin";
    build->add_option("--n", cfg.n, "vertex count");
    build->add_option("--s", cfg.s, "demand set size bound");
    build->add_option("--seed", cfg.seed, "random seed");
    build->add_option("--policy", policy, "filler part policy")->check(CLI::IsMember({"round-robin", "smallest"}));
    build->add_option("--audit-parts", cfg.audit_parts_bound, "part bound for the realization audit");
    build->add_option("-o,--out", out_path, "graph export path (default: stdout, report on stderr)");

    auto* audit = app.add_subcommand("audit", "age audit of a graph export against a family");
    add_lang(audit);
    add_family(audit);
    int parts_bound = 4;
    audit->add_option("-g,--graph", in.graph, "graph export")->required();
    audit->add_option("--parts-bound", parts_bound, "largest monic part count to realize");

    auto* sample = app.add_subcommand("sample-homogeneity", "sampled one-point extension rate of a graph export");
    add_lang(sample);
    int k = 3;
    std::uint64_t trials = 500;
    std::uint64_t sample_seed = BuildConfig{}.seed;
    sample->add_option("-g,--graph", in.graph, "graph export")->required();
    sample->add_option("--k", k, "largest partial isomorphism size");
    sample->add_option("--trials", trials, "trial count");
    sample->add_option("--seed", sample_seed, "random seed");

    auto* enumerate = app.add_subcommand("enumerate", "census of passing families up to colour isomorphism");
    add_lang(enumerate);
    EnumerateOptions eo;
    bool all_monics = false;
    enumerate->add_flag("--maximal", eo.maximal_only, "only families with no passing one-monic extension");
    enumerate->add_flag("--triangles-only", eo.triangles_only, "triangle members only (default)");
    enumerate->add_flag("--all-monics", all_monics, "members on any number of parts");
    enumerate->add_option("--max-members", eo.max_members, "largest family size (0: no limit)");
    enumerate->add_option("--budget", eo.budget, "candidate families canonicalized");
    add_threads(enumerate);

    auto* canon = app.add_subcommand("canon", "canonical form of a family, graph, or monic");
    add_lang(canon);
    std::string monic_text;
    bool parts_fixed = false;
    canon->add_option("-f,--family", in.family, "family file");
    canon->add_option("-g,--graph", in.graph, "graph export");
    canon->add_option("-m,--monic", monic_text, "bracket monic");
    canon->add_flag("--parts-fixed", parts_fixed, "vertex bijections within parts only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*validate) {
            auto lang = load_language(in.language);
            std::cout << "language_valid=true parts=" << lang->parts() << "\n";
            int rc = kExitPass;
            if (!in.family.empty()) {
                Family f(lang, parse_family_file(read_file(in.family), *lang).members);
                auto r = validate_family(f);
                print_report(r, "family");
                if (!r.ok()) rc = kExitInvalid;
            }
            if (!in.graph.empty()) {
                auto g = parse_graph(read_file(in.graph), *lang);
                auto r = validate_graph(g, *lang);
                print_report(r, "graph");
                if (!r.ok()) rc = kExitInvalid;
            }
            return rc;
        }
        if (*check) {
            auto l = load(in, true);
            CheckOptions opts;
            opts.loose_based_on = loose;
            auto v = classify(*l.family, opts);
            print_verdict(v, *l.lang);
            return v.status == Status::pass ? kExitPass : v.status == Status::fail ? kExitFail : kExitInvalid;
        }
        if (*oracle) {
            auto l = load(in, true);
            if (!validate_family(*l.family).ok()) {
                print_report(validate_family(*l.family), "family");
                return kExitInvalid;
            }
            OracleOptions opts;
            opts.max_base = max_base >= 0 ? max_base : default_max_base(*l.lang);
            opts.budget = oracle_budget;
            opts.threads = in.threads;
            auto v = bruteforce_check(*l.family, opts);
            std::cout << "status=" << (v.status == OracleStatus::pass ? "PASS" : v.status == OracleStatus::fail ? "FAIL" : "INCONCLUSIVE") << "\n";
            std::cout << "max_base=" << v.max_base << "\n";
            std::cout << "completeness_bound=" << v.completeness_bound << "\n";
            std::cout << "sufficient_bound=" << v.sufficient_bound << "\n";
            std::cout << "complete=" << (v.complete ? "true" : "false") << "\n";
            std::cout << "bases=" << v.bases << "\n";
            std::cout << "diagrams=" << v.diagrams << "\n";
            std::cout << "threads=" << in.threads << "\n";
            if (!v.note.empty()) std::cout << "note=" << v.note << "\n";
            if (v.witness) print_witness(*v.witness, *l.lang);
            return v.status == OracleStatus::pass ? kExitPass : v.status == OracleStatus::fail ? kExitFail : kExitInconclusive;
        }
        if (*witness) {
            auto l = load(in, true);
            auto w = witness_search(*l.family, pair[0], pair[1]);
            std::cout << "found=" << (w ? "true" : "false") << "\n";
            if (w) {
                std::cout << "replays=" << (replay(*w, *l.family) ? "true" : "false") << "\n";
                print_witness(*w, *l.lang);
            }
            return w ? kExitPass : kExitFail;
        }
        if (*gcssa) {
            auto l = load(in, true);
            const int i = gpair[0], j = gpair[1];
            CoverSet b0;
            b0.i = i;
            b0.j = j;
            std::map<Colour, Monic> slots;
            for (const auto& arg : cover_args) {
                auto eq = arg.find('=');
                if (eq == std::string::npos) throw std::invalid_argument("--cover expects COLOUR=NAME, got '" + arg + "'");
                slots.insert_or_assign(parse_colour(arg.substr(0, eq), *l.lang, i, j), member_by_name(arg.substr(eq + 1), l));
            }
            for (int c = 0; c < l.lang->colour_count(i, j); ++c) {
                auto it = slots.find(static_cast<Colour>(c));
                if (it == slots.end()) throw std::invalid_argument("--cover lacks colour " + l.lang->colour_name(i, j, c));
                b0.by_colour.push_back(it->second);
            }
            std::optional<Colour> g0;
            if (!gamma0.empty()) g0 = parse_colour(gamma0, *l.lang, i, j);
            if (find.empty()) {
                auto out = gcssa_run(b0, *l.family, g0);
                print_outcome(out, *l.lang, "");
                return out.kind == GcssaKind::stalled ? kExitFail : kExitPass;
            }
            auto res = find == "good" ? find_good_cover_set(b0, *l.family) : find_star_cover_set(b0, *l.family);
            std::cout << "found=" << (res.cover ? "true" : "false") << "\n";
            if (res.cover) std::cout << "cover=" << format_cover_set(*res.cover, *l.lang) << "\n";
            if (res.key) std::cout << "key=" << l.lang->colour_name(i, j, *res.key) << "\n";
            std::cout << "minimal_certified=" << (res.minimal_certified ? "true" : "false") << "\n";
            std::cout << "examined=" << res.examined << "\n";
            for (std::size_t r = 0; r < res.runs.size(); ++r) print_outcome(res.runs[r], *l.lang, "run" + std::to_string(r) + "_");
            for (const auto& f : res.findings) std::cout << "finding=" << f << "\n";
            return res.cover ? kExitPass : kExitFail;
        }
        if (*build) {
            auto l = load(in, true);
            cfg.policy = policy == "smallest" ? PartPolicy::smallest_part : PartPolicy::round_robin;
            auto rep = build_generic(*l.family, cfg);
            const bool to_stdout = out_path.empty();
            std::ostream& report = to_stdout ? std::cerr : std::cout;
            if (to_stdout) {
                std::cout << serialize_graph(rep.graph, *l.lang);
            } else {
                std::ofstream os(out_path);
                if (!os) throw std::runtime_error("cannot write " + out_path);
                os << serialize_graph(rep.graph, *l.lang);
            }
            report << "seed=" << cfg.seed << "\n";
            report << "n=" << rep.graph.size() << "\n";
            report << "s=" << cfg.s << "\n";
            report << "demands_issued=" << rep.demands_issued << "\n";
            report << "demands_satisfied=" << rep.demands_satisfied << "\n";
            report << "demand_vertices=" << rep.demand_vertices << "\n";
            report << "filler_vertices=" << rep.filler_vertices << "\n";
            report << "part_sizes=";
            for (std::size_t p = 0; p < rep.part_sizes.size(); ++p) report << (p ? "," : "") << rep.part_sizes[p];
            report << "\n";
            report << "audit_forbidden=" << rep.audit.forbidden.size() << "\n";
            report << "audit_free_types=" << rep.audit.free_types << "\n";
            report << "audit_missing=" << rep.audit.missing.size() << "\n";
            report << "audit_ok=" << (rep.audit.ok() ? "true" : "false") << "\n";
            for (const auto& f : rep.findings) report << "finding=" << f << "\n";
            return rep.audit.ok() ? kExitPass : kExitFail;
        }
        if (*audit) {
            auto l = load(in, true);
            auto g = parse_graph(read_file(in.graph), *l.lang);
            auto a = audit_age(g, *l.family, std::min(parts_bound, l.lang->parts()));
            std::cout << "omits_family=" << (a.omits_family() ? "true" : "false") << "\n";
            std::cout << "realizes_all=" << (a.realizes_all() ? "true" : "false") << "\n";
            std::cout << "free_types=" << a.free_types << "\n";
            std::cout << "missing=" << a.missing.size() << "\n";
            for (const auto& h : a.forbidden) {
                std::cout << "forbidden=" << format_monic(h.member, *l.lang) << " image=";
                for (std::size_t v = 0; v < h.image.size(); ++v) std::cout << (v ? "," : "") << h.image[v];
                std::cout << "\n";
            }
            for (const auto& m : a.missing) std::cout << "missing_type=" << format_monic(m, *l.lang) << "\n";
            return a.ok() ? kExitPass : kExitFail;
        }
        if (*sample) {
            auto lang = load_language(in.language);
            auto g = parse_graph(read_file(in.graph), *lang);
            auto s = sample_homogeneity(g, k, trials, sample_seed);
            std::cout << "seed=" << sample_seed << "\n";
            std::cout << "k=" << k << "\n";
            std::cout << "trials=" << s.trials << "\n";
            std::cout << "successes=" << s.successes << "\n";
            std::cout << "rate=" << (s.rate ? std::to_string(*s.rate) : "none") << "\n";
            for (const auto& f : s.failures) std::cout << "failure=" << f << "\n";
            return kExitPass;
        }
        if (*enumerate) {
            auto lang = load_language(in.language);
            if (all_monics) eo.triangles_only = false;
            else eo.triangles_only = true;
            eo.threads = in.threads;
            auto census = enumerate_valid_families(*lang, eo, [&](const EnumeratedFamily& e) {
                std::cout << "family size=" << e.family.size() << " form=" << e.form.hex() << " status=PASS";
                if (e.maximality_tested) std::cout << " maximal=true";
                std::cout << " members=";
                for (std::size_t m = 0; m < e.family.size(); ++m)
                    std::cout << (m ? "," : "") << format_monic(e.family.members()[m], *lang);
                std::cout << "\n";
            });
            std::cout << "emitted=" << census.families.size() << "\n";
            std::cout << "pruned_non_maximal=" << census.pruned.size() << "\n";
            std::cout << "failing=" << census.failing << "\n";
            std::cout << "classes_examined=" << census.classes_examined << "\n";
            std::cout << "candidates=" << census.candidates << "\n";
            std::cout << "complete_levels=" << census.complete_levels << "\n";
            std::cout << "partial=" << (census.partial ? "true" : "false") << "\n";
            if (census.partial) std::cout << "partial_reason=" << census.partial_reason << "\n";
            return census.partial ? kExitInconclusive : kExitPass;
        }
        if (*canon) {
            auto lang = load_language(in.language);
            const int given = !in.family.empty() + !in.graph.empty() + !monic_text.empty();
            if (given != 1) throw std::invalid_argument("canon needs exactly one of --family, --graph, --monic");
            const auto eq = parts_fixed ? Equivalence::parts_fixed : Equivalence::colour_isomorphism;
            CanonicalForm form;
            if (!in.family.empty()) form = family_canonical_form(Family(lang, parse_family_file(read_file(in.family), *lang).members));
            else if (!in.graph.empty()) form = canonical_form(parse_graph(read_file(in.graph), *lang), *lang, eq);
            else form = canonical_form(parse_monic(monic_text, *lang), *lang, eq);
            std::cout << "form=" << form.hex() << "\n";
            return kExitPass;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
