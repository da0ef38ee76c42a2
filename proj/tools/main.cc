#include "cli_support.hh"

#include "lres/distance.hh"
#include "lres/edge_list.hh"
#include "lres/errors.hh"
#include "lres/generators.hh"
#include "lres/resolving.hh"
#include "lres/rook_design.hh"
#include "lres/search.hh"
#include "lres/snark.hh"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace lres;
using namespace lres::cli;

namespace {

constexpr int exit_holds = 0, exit_fails = 1, exit_error = 2;

struct Globals {
    bool json = false;
    bool timing = false;
    bool long_run = false;
    int workers = 1;
    double budget = 60.0;
    std::uint64_t seed = 1;
    std::vector<std::string> argv;
};

struct Reporter {
    const Globals & globals;
    std::string command;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    auto emit(const std::string & digest, json result, const std::optional<json> & witness, const std::string & human) const -> void
    {
        if (globals.json) {
            json report{{"version", LRES_VERSION}, {"command", command}, {"argv", globals.argv},
                {"input_digest", digest}, {"result", std::move(result)}};
            if (witness)
                report["witness"] = *witness;
            if (globals.timing)
                report["timing"] = {{"seconds", elapsed()}};
            std::cout << report.dump(2) << '\n';
        }
        else {
            std::cout << human;
            if (globals.timing)
                std::cout << "time: " << elapsed() << " s\n";
        }
    }

    auto elapsed() const -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

auto make_mode(const std::string & kind, int ell) -> Mode
{
    switch (parse_kind(kind)) {
    case Kind::resolving: return Mode::resolving(ell);
    case Kind::solid: return Mode::solid(ell);
    case Kind::doubly: return Mode::doubly();
    }
    throw Error("unknown mode");
}

auto write_output(const std::string & text, const std::string & out) -> void
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (! f)
        throw Error("cannot write " + out);
    f << text;
}

auto parse_range(const std::string & text) -> std::pair<int, int>
{
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    }
    catch (const std::exception &) {
        throw Error("bad range '" + text + "' (expected a..b)");
    }
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    Globals g;
    for (int i = 1; i < argc; ++i)
        g.argv.emplace_back(argv[i]);

    CLI::App app{"Resolving-set verification and exact search"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(LRES_VERSION));
    app.add_flag("--json", g.json, "Emit JSON reports");
    app.add_flag("--timing", g.timing, "Include wall-clock timing in reports");
    app.add_flag("--long", g.long_run, "Enable long-running verification ranges");
    app.add_option("--workers", g.workers, "Worker threads")->check(CLI::Range(1, 1024));
    app.add_option("--budget", g.budget, "Time budget in seconds per search")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for sampled checks");

    int exit_code = exit_holds;

    // gen
    std::string gen_family, gen_out, gen_parents;
    int gen_n = -1, gen_m = -1;
    auto * gen = app.add_subcommand("gen", "Generate a graph family as an edge list");
    gen->add_option("family", gen_family, "path, cycle, complete, star, tree, flower-snark, rook or H")->required();
    gen->add_option("--n", gen_n, "Size parameter (rows for rook, leaves for star)");
    gen->add_option("--m", gen_m, "Columns for rook");
    gen->add_option("--parents", gen_parents, "Comma-separated parent list for tree (root -1)");
    gen->add_option("--out", gen_out, "Output file (default stdout)");
    gen->callback([&] {
        FamilySpec spec{gen_family, {}};
        if (gen_family == "rook") {
            if (gen_m < 0 || gen_n < 0)
                throw Error("rook needs --m and --n");
            spec.params = {gen_m, gen_n};
        }
        else if (gen_family == "tree") {
            std::vector<int> parents;
            std::stringstream ss(gen_parents);
            for (std::string tok; std::getline(ss, tok, ',');)
                parents.push_back(std::stoi(tok));
            auto graph = tree_from_parents(parents);
            write_output(write_edge_list(graph), gen_out);
            return;
        }
        else if (gen_family != "H") {
            if (gen_n < 0)
                throw Error(gen_family + " needs --n");
            spec.params = {gen_n};
        }
        write_output(write_edge_list(generate_family(spec)), gen_out);
    });

    // check
    std::string graph_spec, set_text_arg, mode_kind = "resolving";
    int ell = 1;
    auto add_mode_options = [&](CLI::App * sub) {
        sub->add_option("--mode", mode_kind, "resolving, solid or doubly")->check(CLI::IsMember({"resolving", "solid", "doubly"}));
        sub->add_option("--ell", ell, "Order l");
    };
    auto * check = app.add_subcommand("check", "Check a vertex set against a mode");
    check->add_option("graph", graph_spec, "Edge-list file or builtin graph")->required();
    check->add_option("--set", set_text_arg, "Comma-separated indices or labels")->required();
    add_mode_options(check);
    check->callback([&] {
        Reporter rep{g, "check"};
        auto graph = resolve_graph(graph_spec);
        auto dm = all_pairs_distances(graph);
        auto mode = make_mode(mode_kind, ell);
        auto s = parse_vertex_set(graph, set_text_arg);
        auto verdict = check_mode(dm, s, mode);
        json result{{"mode", to_string(mode)}, {"set", set_json(graph, s)}, {"holds", verdict.holds}};
        std::optional<json> wj;
        std::string human = set_text(graph, s) + (verdict.holds ? " is " : " is not ") + to_string(mode) + "\n";
        if (verdict.witness) {
            wj = witness_json(graph, *verdict.witness);
            human += "witness: " + witness_text(graph, *verdict.witness) + "\n";
        }
        rep.emit(digest(graph), result, wj, human);
        exit_code = verdict.holds ? exit_holds : exit_fails;
    });

    // dim
    std::optional<int> dim_min, dim_max;
    bool no_prefilter = false;
    std::string verify_set;
    auto * dim = app.add_subcommand("dim", "Exact minimum cardinality by exhaustive search");
    dim->add_option("graph", graph_spec, "Edge-list file or builtin graph")->required();
    add_mode_options(dim);
    dim->add_option("--min", dim_min, "Smallest cardinality to try");
    dim->add_option("--max", dim_max, "Largest cardinality to try");
    dim->add_flag("--no-prefilter", no_prefilter, "Disable the lower-order solid pre-filter");
    dim->add_option("--verify", verify_set, "Certify a supplied basis instead of searching");
    dim->callback([&] {
        Reporter rep{g, "dim"};
        auto graph = resolve_graph(graph_spec);
        auto dm = all_pairs_distances(graph);
        auto mode = make_mode(mode_kind, ell);
        if (! verify_set.empty()) {
            auto s = parse_vertex_set(graph, verify_set);
            auto cert = verify_basis_certificate(graph, dm, mode, s, g.budget, g.workers);
            json result{{"mode", to_string(mode)}, {"set", set_json(graph, s)}, {"certificate", to_string(cert.status)},
                {"subsets_examined", cert.stats.subsets_examined}};
            std::optional<json> wj;
            std::string human = set_text(graph, s) + ": " + to_string(cert.status) + "\n";
            if (cert.smaller) {
                wj = json{{"kind", "smaller-set"}, {"set", set_json(graph, *cert.smaller)}};
                human += "smaller passing set: " + set_text(graph, *cert.smaller) + "\n";
            }
            rep.emit(digest(graph), result, wj, human);
            exit_code = cert.status == CertificateStatus::certified ? exit_holds : exit_fails;
            return;
        }
        SearchConfig config;
        config.mode = mode;
        config.budget_seconds = g.budget;
        config.workers = g.workers;
        config.min_size = dim_min;
        config.max_size = dim_max;
        config.prefilter = ! no_prefilter;
        auto r = metric_dimension(graph, dm, config);
        json result{{"mode", to_string(mode)}, {"exact", r.exact}, {"value", r.value},
            {"lower_bound", {{"value", r.lower_bound.value}, {"provenance", to_string(r.lower_bound.source)}}},
            {"last_exhausted", r.last_exhausted}, {"required", set_json(graph, r.required)},
            {"stats", {{"subsets_examined", r.stats.subsets_examined}, {"prefiltered", r.stats.prefiltered}}}};
        if (r.basis)
            result["basis"] = set_json(graph, *r.basis);
        if (g.timing)
            result["stats"]["wall_seconds"] = r.stats.wall_seconds;
        std::string human;
        if (r.exact)
            human = "dimension " + std::to_string(r.value) + ", basis " + set_text(graph, *r.basis) + "\n";
        else if (r.basis)
            human = "no passing set in the requested range; lower bound " + std::to_string(r.value) + "\n";
        else
            human = "unknown, at least " + std::to_string(r.value) + " (" + to_string(r.lower_bound.source) + ")\n";
        human += "subsets examined: " + std::to_string(r.stats.subsets_examined) + "\n";
        rep.emit(digest(graph), result, std::nullopt, human);
        exit_code = r.exact ? exit_holds : exit_fails;
    });

    // forced
    auto * forced = app.add_subcommand("forced", "Vertices contained in every set of the mode");
    forced->add_option("graph", graph_spec, "Edge-list file or builtin graph")->required();
    add_mode_options(forced);
    forced->callback([&] {
        Reporter rep{g, "forced"};
        auto graph = resolve_graph(graph_spec);
        auto dm = all_pairs_distances(graph);
        auto mode = make_mode(mode_kind, ell);
        if (mode.kind == Kind::doubly)
            throw Error("forced vertices are defined for resolving and solid modes only");
        mode.validate(graph.size());
        auto f = forced_vertices(graph, dm, ell, mode.kind == Kind::solid ? ForcedKind::solid : ForcedKind::resolving);
        rep.emit(digest(graph), json{{"mode", to_string(mode)}, {"forced", set_json(graph, f)}, {"count", f.size()}},
            std::nullopt, std::to_string(f.size()) + " forced: " + set_text(graph, f) + "\n");
    });

    // rook-lb
    int lb_m = 0, lb_n = 0;
    auto * rook_lb = app.add_subcommand("rook-lb", "Counting lower bound for {2}-resolving sets of rook graphs");
    rook_lb->add_option("--m", lb_m, "Columns")->required();
    rook_lb->add_option("--n", lb_n, "Rows")->required();
    rook_lb->callback([&] {
        Reporter rep{g, "rook-lb"};
        auto b = rook_lower_bound(lb_m, lb_n);
        rep.emit(digest_text(std::to_string(lb_m) + "x" + std::to_string(lb_n)),
            json{{"m", lb_m}, {"n", lb_n}, {"bound", b.value}, {"transposed", b.transposed}}, std::nullopt,
            "lower bound " + std::to_string(b.value) + (b.transposed ? " (transposed)" : "") + "\n");
    });

    // design
    std::string design_action, design_file, design_set, design_out;
    int design_m = 0, design_n = 0;
    auto * design = app.add_subcommand("design", "Block-design bridge for rook graphs");
    design->add_option("--action", design_action, "to-set, from-set, validate or verify")
        ->required()->check(CLI::IsMember({"to-set", "from-set", "validate", "verify"}));
    design->add_option("--file", design_file, "Design file");
    design->add_option("--m", design_m, "Columns (blocks)")->required();
    design->add_option("--n", design_n, "Rows (points)")->required();
    design->add_option("--set", design_set, "Flat cell indices for from-set");
    design->add_option("--out", design_out, "Design output for from-set");
    design->callback([&] {
        Reporter rep{g, "design"};
        if (design_action == "from-set") {
            auto graph = rook_graph(design_m, design_n);
            auto s = RookSet::from_vertex_set(design_m, design_n, parse_vertex_set(graph, design_set));
            auto d = set_to_design(s);
            auto text = write_design(d);
            if (! design_out.empty())
                write_output(text, design_out);
            rep.emit(digest_text(text), json{{"design", text}, {"blocks", d.blocks}}, std::nullopt, design_out.empty() ? text : "");
            return;
        }
        if (design_file.empty())
            throw Error("--file is required for " + design_action);
        auto d = read_design_file(design_file);
        const auto dig = digest_text(write_design(d));
        if (design_action == "validate") {
            auto v = validate_design(d, design_m, design_n);
            std::optional<json> wj;
            std::string human = v.holds ? "design satisfies all three conditions\n" : "design violates: " + to_string(*v.witness) + "\n";
            if (v.witness)
                wj = json{{"kind", "design-violation"}, {"condition", v.witness->condition}, {"detail", to_string(*v.witness)}};
            rep.emit(dig, json{{"holds", v.holds}}, wj, human);
            exit_code = v.holds ? exit_holds : exit_fails;
            return;
        }
        auto s = design_to_set(d, design_m, design_n);
        auto graph = rook_graph(design_m, design_n);
        json result{{"size", s.size()}, {"set", set_json(graph, s.to_vertex_set())}, {"cells", cells_json(s)}};
        std::string human = std::to_string(s.size()) + "-cell set " + set_text(graph, s.to_vertex_set()) + "\n";
        if (design_action == "verify") {
            auto dm = all_pairs_distances(graph);
            auto generic = is_l_resolving(dm, s.to_vertex_set(), 2);
            auto cls = classify_conditions(s);
            result["resolving_2"] = generic.holds;
            result["type1"] = cls.type1();
            result["type2"] = cls.type2;
            if (design_m >= design_n && design_n >= 6)
                result["sufficient"] = sufficiency_check(s).holds;
            human += std::string("{2}-resolving: ") + (generic.holds ? "yes" : "no") + "\n";
            exit_code = generic.holds ? exit_holds : exit_fails;
        }
        rep.emit(dig, result, std::nullopt, human);
    });

    // snark-suite
    std::string suite_range = "5..9";
    int samples = 50;
    auto * suite = app.add_subcommand("snark-suite", "Flower-snark reproduction suite");
    suite->add_option("--n", suite_range, "Odd n or range a..b");
    suite->add_option("--samples", samples, "Random admissible sets per reduction check")->check(CLI::Range(1, 100000));
    suite->callback([&] {
        auto [lo, hi] = parse_range(suite_range);
        SuiteConfig config;
        config.n_min = lo;
        config.n_max = hi;
        config.long_run = g.long_run;
        config.workers = g.workers;
        config.seed = g.seed;
        config.reduction_samples = samples;
        config.budget_seconds = g.budget;
        auto records = run_snark_suite(config);
        bool all = true;
        for (const auto & r : records) {
            all = all && r.holds;
            if (g.json) {
                json j{{"n", r.n}, {"check_name", r.check_name}, {"holds", r.holds}};
                if (r.witness)
                    j["witness"] = *r.witness;
                if (g.timing)
                    j["millis"] = r.millis;
                std::cout << j.dump() << '\n';
            }
            else {
                std::cout << "n=" << r.n << ' ' << r.check_name << ": " << (r.holds ? "PASS" : "FAIL");
                if (r.witness)
                    std::cout << " (" << *r.witness << ')';
                if (g.timing)
                    std::cout << " [" << r.millis << " ms]";
                std::cout << '\n';
            }
        }
        exit_code = all ? exit_holds : exit_fails;
    });

    // product
    std::string left_spec, right_spec, product_out;
    auto * product = app.add_subcommand("product", "Cartesian product of two graphs");
    product->add_option("left", left_spec, "First factor")->required();
    product->add_option("right", right_spec, "Second factor")->required();
    product->add_option("--out", product_out, "Output file (default stdout)");
    product->callback([&] {
        auto p = cartesian_product(resolve_graph(left_spec), resolve_graph(right_spec));
        write_output(write_edge_list(p), product_out);
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::Success & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_error;
    }
    catch (const DisconnectedGraph & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_code;
}
