// Command-line front end for the order calculus: parse a term of the DSL,
// synthesize its attribute report, compute ranks and condensations, draw
// seeded samples, grow finite dense orders, and run the regression suites.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordcalc/attrs.hpp"
#include "ordcalc/catalog.hpp"
#include "ordcalc/checks.hpp"
#include "ordcalc/condense.hpp"
#include "ordcalc/densegen.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/report.hpp"
#include "ordcalc/sampler.hpp"

namespace {

struct Config {
    int ordinal_depth = 8;
    int sample_width = 6;
    int sample_max_stage = 3;
    int condense_cap = 16;
    int enum_cap = 1000000;
    std::string kappa_instantiation = "w^2";
};

Config load_config(const std::string& path) {
    Config cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw ordcalc::ValidationError("cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (line.empty() || line[0] == '#' || eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string raw = line.substr(eq + 1);
        if (key == "kappa_instantiation") {
            cfg.kappa_instantiation = raw;
            continue;
        }
        int value = std::stoi(raw);
        if (key == "ordinal_depth")
            cfg.ordinal_depth = value;
        else if (key == "sample_width")
            cfg.sample_width = value;
        else if (key == "sample_max_stage")
            cfg.sample_max_stage = value;
        else if (key == "condense_cap")
            cfg.condense_cap = value;
        else if (key == "enum_cap")
            cfg.enum_cap = value;
        else
            throw ordcalc::ValidationError("unknown config key " + key);
    }
    return cfg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ordcalc::ValidationError("cannot write " + path);
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    using namespace ordcalc;
    CLI::App app{"symbolic calculus for orders built from ordinals, dense leaves and sums"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file");

    std::string term_text, dot_path;
    auto* analyze = app.add_subcommand("analyze", "synthesize the attribute report of a term");
    analyze->add_option("term", term_text)->required();

    std::string rank_kind = "hausdorff";
    auto* rank = app.add_subcommand("rank", "rank computations on a term");
    rank->add_option("term", term_text)->required();
    rank->add_option("--kind", rank_kind, "hausdorff|antichain|hierarchy");

    std::string cond_mode = "finite";
    auto* condense = app.add_subcommand("condense", "condense a linear term");
    condense->add_option("term", term_text)->required();
    condense->add_option("--mode", cond_mode, "finite|h");

    int sample_n = 16;
    std::uint64_t seed = 1;
    auto* sample = app.add_subcommand("sample", "draw a finite restriction");
    sample->add_option("term", term_text)->required();
    sample->add_option("-n", sample_n, "sample size");
    sample->add_option("--seed", seed, "generator seed");
    sample->add_option("--dot", dot_path, "also write the Hasse diagram here");

    int rounds = 3, bound = 3;
    std::uint64_t gd_seed = 0;
    auto* gen = app.add_subcommand("gen-dense", "saturate a small chain by gap requests");
    gen->add_option("--rounds", rounds, "saturation rounds");
    gen->add_option("--bound", bound, "side-size bound of gap requests");
    gen->add_option("--seed", gd_seed, "permutes the start ids");

    std::string suite = "all";
    auto* check = app.add_subcommand("check", "run a named regression suite");
    check->add_option("suite", suite, "suite name or 'all'");

    auto* examples = app.add_subcommand("examples", "list the built-in term catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Config cfg = load_config(config_path);
        set_ordinal_depth_cap(cfg.ordinal_depth);
        set_condense_iteration_cap(cfg.condense_cap);
        set_enum_cap(static_cast<std::size_t>(cfg.enum_cap));
        SampleWeights weights;
        weights.leaf_width = cfg.sample_width;
        weights.max_stage = cfg.sample_max_stage;
        Instantiation inst = Instantiation::standard();
        inst.kappa_value = parse_cnf(cfg.kappa_instantiation);

        if (*analyze) {
            TermPtr t = parse(term_text);
            std::cout << attr_report_json(t, attrs(t)) << "\n";
        } else if (*rank) {
            TermPtr t = parse(term_text);
            if (rank_kind == "hausdorff") {
                CnfOrdinal v = hausdorff_rank(t);
                std::cout << rank_json(t, rank_kind, v, false, "structural recursion") << "\n";
            } else if (rank_kind == "antichain") {
                if (t->kind == Term::Kind::Fin) {
                    std::cout << rank_json(t, rank_kind, antichain_rank_exact(t->poset), false,
                                           "exact enumeration")
                              << "\n";
                } else {
                    std::cout << rank_json(t, rank_kind, rho_surrogate(t), false,
                                           "surrogate bound (product formula)")
                              << "\n";
                }
            } else if (rank_kind == "hierarchy") {
                HierInfo h = hierarchy_info(t);
                std::cout << rank_json(t, rank_kind, h.alpha_bound, h.in_h, "level upper bound")
                          << "\n";
            } else {
                throw ValidationError("unknown rank kind " + rank_kind);
            }
        } else if (*condense) {
            TermPtr t = parse(term_text);
            CondensationResult r;
            if (cond_mode == "finite")
                r = condense_finite(t);
            else if (cond_mode == "h")
                r = condense_h(t);
            else
                throw ValidationError("unknown condensation mode " + cond_mode);
            std::cout << condensation_json(t, cond_mode, r) << "\n";
        } else if (*sample) {
            TermPtr t = parse(term_text);
            Sample s = sample_restriction(t, sample_n, seed, weights, inst);
            std::cout << s.to_json() << "\n";
            if (!dot_path.empty()) {
                std::vector<std::string> labels;
                for (const auto& a : s.addresses) labels.push_back(a.str());
                write_file(dot_path, s.poset.to_dot(labels));
            }
        } else if (*gen) {
            if (rounds < 0 || rounds > 6) throw ValidationError("rounds must be between 0 and 6");
            if (bound < 1 || bound > 4) throw ValidationError("bound must be between 1 and 4");
            SaturationResult r = saturate(StageOrder::chain(2, gd_seed), rounds, bound);
            std::cout << r.to_json() << "\n";
        } else if (*check) {
            char buf[4096];
            ssize_t len = readlink("/proc/self/exe", buf, sizeof buf - 1);
            std::string self = len > 0 ? std::string(buf, static_cast<std::size_t>(len)) : "";
            std::vector<CheckResult> results;
            if (suite == "all")
                results = run_all_checks(self);
            else
                results.push_back(run_check(suite, self));
            bool pass = true;
            for (const auto& r : results) {
                std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "\n";
                pass = pass && r.pass;
            }
            std::cout << check_results_json(results) << "\n";
            return pass ? 0 : 1;
        } else if (*examples) {
            nlohmann::json j;
            j["schema_version"] = 1;
            j["examples"] = nlohmann::json::array();
            for (const auto& e : catalog()) {
                AttrReport r = attrs(e.term);
                j["examples"].push_back({{"name", e.name},
                                         {"term", e.term->str()},
                                         {"card", r.card.str()},
                                         {"linear", r.linear}});
            }
            std::cout << j.dump(2) << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
