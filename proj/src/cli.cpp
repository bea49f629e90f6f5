#include "isotree/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isotree/coloring.hpp"
#include "isotree/constructive.hpp"
#include "isotree/exact_dp.hpp"
#include "isotree/families.hpp"
#include "isotree/json_io.hpp"
#include "isotree/suite.hpp"

namespace isotree {

namespace {

Tree read_tree(const std::string& file, std::istream& in) {
    if (!file.empty()) {
        std::ifstream f(file);
        if (!f) throw PreconditionError("cannot open file: " + file);
        std::stringstream buf;
        buf << f.rdbuf();
        return parse_edge_list(buf.str());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

json read_json_file(const std::string& file) {
    std::ifstream f(file);
    if (!f) throw PreconditionError("cannot open file: " + file);
    json j;
    f >> j;
    return j;
}

VertexSet parse_vertex_list(const std::string& csv, int n) {
    VertexSet s(n);
    if (csv.empty()) return s;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        s.insert(std::stoi(item));
    }
    return s;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

IsolationSpec make_spec(int k, const std::string& kind, const std::string& pattern_file) {
    if (kind == "allk") return IsolationSpec::all_k(k);
    if (kind == "star") return IsolationSpec::star(k);
    if (kind == "pattern") {
        if (pattern_file.empty())
            throw PreconditionError("--spec pattern requires --pattern FILE");
        std::ifstream f(pattern_file);
        if (!f) throw PreconditionError("cannot open pattern file: " + pattern_file);
        std::stringstream buf;
        buf << f.rdbuf();
        return IsolationSpec::pattern(parse_edge_list(buf.str()));
    }
    throw PreconditionError("unknown spec kind: " + kind);
}

struct ExceptionExit {
    int code;
    json payload;
};

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"isolation structures in trees: exact solvers, constructions, certifiers"};
    app.require_subcommand(1);

    std::string file, spec_kind = "allk", pattern_file, engine = "dp";
    int k = 2;
    bool independent = false;
    bool dot = false;

    auto add_tree_input = [&](CLI::App* cmd) { cmd->add_option("--file", file, "edge-list file (default: stdin)"); };

    auto* solve = app.add_subcommand("solve", "minimum isolating set (exact)");
    solve->add_option("--k", k, "isolation order k")->required();
    solve->add_flag("--independent", independent, "require the set to be independent");
    solve->add_option("--engine", engine, "dp | oracle | both (default dp)");
    solve->add_option("--spec", spec_kind, "allk | star | pattern (default allk)");
    solve->add_option("--pattern", pattern_file, "pattern tree file for --spec pattern");
    add_tree_input(solve);

    auto* bound = app.add_subcommand("bound", "independent set of size <= floor(n/(k+1))");
    bound->add_option("--k", k, "isolation order k")->required();
    add_tree_input(bound);

    auto* color = app.add_subcommand("color", "partition into k+1 isolating classes");
    bool do_search = false;
    int search_l = 0;
    color->add_option("--k", k, "isolation order k (2..5)");
    color->add_flag("--search", do_search, "exhaustive search instead of the constructors");
    color->add_option("--l", search_l, "number of colors for --search");
    color->add_option("--spec", spec_kind, "allk | star | pattern (search only)");
    color->add_option("--pattern", pattern_file, "pattern tree file");
    color->add_flag("--dot", dot, "emit DOT with classes instead of JSON");
    add_tree_input(color);

    auto* verify = app.add_subcommand("verify", "certify a set or coloring");
    std::string set_csv, coloring_csv;
    int verify_l = 0;
    verify->add_option("--k", k, "isolation order k")->required();
    verify->add_option("--spec", spec_kind, "allk | star | pattern");
    verify->add_option("--pattern", pattern_file, "pattern tree file");
    verify->add_option("--set", set_csv, "comma-separated vertex set");
    verify->add_option("--coloring", coloring_csv, "comma-separated colors, one per vertex");
    verify->add_option("--l", verify_l, "number of colors for --coloring");
    verify->add_flag("--dot", dot, "also emit DOT for colorings");
    add_tree_input(verify);

    auto* gen = app.add_subcommand("gen", "generate named families");
    gen->require_subcommand(1);
    auto* gen_extremal_cmd = gen->add_subcommand("extremal", "base tree plus pendant order-k attachments");
    std::string recipe_file;
    gen_extremal_cmd->add_option("--recipe", recipe_file, "recipe JSON file")->required();
    auto* gen_hk = gen->add_subcommand("hk", "subdivided-star counterexample H_k");
    gen_hk->add_option("--k", k, "k >= 7")->required();
    auto* gen_gap = gen->add_subcommand("gap", "independence-gap gadget");
    int gap_b = 2;
    gen_gap->add_option("--b", gap_b, "copies per side")->required();
    gen_gap->add_option("--pattern", pattern_file, "pattern tree file (default P_2)");
    auto* gen_random = gen->add_subcommand("random", "uniform random labelled tree");
    int rand_n = 10;
    std::uint64_t rand_seed = 0;
    gen_random->add_option("--n", rand_n, "order")->required();
    gen_random->add_option("--seed", rand_seed, "seed")->required();

    auto* enum_cmd = app.add_subcommand("enum", "all non-isomorphic trees of order n");
    int enum_n = 1;
    enum_cmd->add_option("--n", enum_n, "order")->required();

    auto* member = app.add_subcommand("member", "decide membership in the extremal family");
    member->add_option("--k", k, "isolation order k")->required();
    add_tree_input(member);

    auto* hk_verify = app.add_subcommand("hkverify", "certify the H_k key observation");
    hk_verify->add_option("--k", k, "7 or 8")->required();
    add_tree_input(hk_verify);

    auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
    int criterion = 0;
    suite->add_option("--criterion", criterion, "run a single criterion (1..7)");

    try {
        std::vector<const char*> argv;
        argv.push_back("iso");
        for (auto& a : args) argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) {  // --help
                out << app.help();
                return 0;
            }
            err << e.what() << "\n";
            return 1;
        }

        if (solve->parsed()) {
            Tree t = read_tree(file, in);
            IsolationSpec spec = make_spec(k, spec_kind, pattern_file);
            if (engine != "oracle" && spec.kind != IsolationSpec::Kind::AllK)
                throw PreconditionError("the dp engine supports only --spec allk; use --engine oracle");
            SolveResult r;
            if (engine == "dp") {
                r = zeta_k(t, k, independent);
            } else if (engine == "oracle") {
                r = min_isolating_set(t, spec, independent);
            } else if (engine == "both") {
                r = zeta_k(t, k, independent);
                SolveResult o = min_isolating_set(t, spec, independent);
                if (r.value != o.value)
                    throw InternalCheckError("engines disagree: dp=" + std::to_string(r.value) +
                                             " oracle=" + std::to_string(o.value));
            } else {
                throw PreconditionError("unknown engine: " + engine);
            }
            out << to_json(r).dump() << "\n";
            return 0;
        }
        if (bound->parsed()) {
            Tree t = read_tree(file, in);
            if (k == 1) {
                SolveResult r = zeta_k(t, 1, true);
                if (t.order() == 1) throw TheoremException("the bound excludes trees of order k");
                json j{{"set", r.witness.members()},
                       {"size", r.value},
                       {"bound", t.order() / 2},
                       {"trace", json::array()}};
                out << j.dump() << "\n";
                return 0;
            }
            ConstructiveResult r = independent_allk_set(t, k);
            out << to_json(r).dump() << "\n";
            return 0;
        }
        if (color->parsed()) {
            Tree t = read_tree(file, in);
            if (do_search) {
                if (search_l < 1) throw PreconditionError("--search requires --l");
                IsolationSpec spec = make_spec(k, spec_kind, pattern_file);
                auto c = search_coloring(t, search_l, spec);
                if (!c) {
                    out << json{{"found", false}}.dump() << "\n";
                    return 0;
                }
                json j{{"found", true}, {"coloring", to_json(*c)}};
                out << j.dump() << "\n";
                return 0;
            }
            ColoringResult r;
            IsolationSpec spec = IsolationSpec::all_k(k);
            switch (k) {
                case 2: r = color_star_isolating(t, 2); break;
                case 3: r = color_star_isolating(t, 3); break;
                case 4: r = color5_all4(t); break;
                case 5: r = color6_all5(t); break;
                default: throw PreconditionError("color constructors cover k in 2..5");
            }
            if (r.exception != ColoringException::None)
                throw ExceptionExit{2, json{{"exception", coloring_exception_name(r.exception)}}};
            Certificate cert = certify_coloring(t, *r.coloring, spec);
            if (dot) {
                out << dot_export(t, &r.coloring->color);
                return 0;
            }
            json j = to_json(*r.coloring);
            j["certificate"] = to_json(cert);
            out << j.dump() << "\n";
            return 0;
        }
        if (verify->parsed()) {
            Tree t = read_tree(file, in);
            IsolationSpec spec = make_spec(k, spec_kind, pattern_file);
            if (!coloring_csv.empty()) {
                Coloring c;
                c.color = parse_int_list(coloring_csv);
                c.ell = verify_l > 0 ? verify_l : *std::max_element(c.color.begin(), c.color.end());
                Certificate cert = certify_coloring(t, c, spec);
                if (dot) out << dot_export(t, &c.color);
                out << to_json(cert).dump() << "\n";
                return 0;
            }
            VertexSet s = parse_vertex_list(set_csv, t.order());
            Certificate cert = is_isolating(t, s, spec);
            out << to_json(cert).dump() << "\n";
            return 0;
        }
        if (gen->parsed()) {
            if (gen_extremal_cmd->parsed()) {
                ExtremalRecipe recipe = extremal_recipe_from_json(read_json_file(recipe_file));
                out << serialize_edge_list(gen_extremal(recipe));
                return 0;
            }
            if (gen_hk->parsed()) {
                HkTree hk = gen_counterexample_Hk(k);
                out << "# center " << hk.center << ", attach end " << hk.attach_end << "\n";
                out << serialize_edge_list(hk.tree);
                return 0;
            }
            if (gen_gap->parsed()) {
                GapGadgetRecipe recipe;
                if (!pattern_file.empty()) {
                    std::ifstream f(pattern_file);
                    if (!f) throw PreconditionError("cannot open pattern file: " + pattern_file);
                    std::stringstream buf;
                    buf << f.rdbuf();
                    recipe.pattern = parse_edge_list(buf.str());
                } else {
                    recipe.pattern = Tree::from_edges(2, {{0, 1}});
                }
                recipe.b = gap_b;
                out << serialize_edge_list(gen_gap_gadget(recipe));
                return 0;
            }
            if (gen_random->parsed()) {
                out << serialize_edge_list(random_tree(rand_n, rand_seed));
                return 0;
            }
        }
        if (enum_cmd->parsed()) {
            auto trees = enumerate_trees(enum_n);
            for (std::size_t i = 0; i < trees.size(); ++i) {
                out << "# " << enum_n << "-vertex tree " << i + 1 << " of " << trees.size() << "\n";
                out << serialize_edge_list(trees[i]);
                if (i + 1 < trees.size()) out << "\n";
            }
            return 0;
        }
        if (member->parsed()) {
            Tree t = read_tree(file, in);
            out << to_json(is_member_Tk(t, k)).dump() << "\n";
            return 0;
        }
        if (hk_verify->parsed()) {
            Tree t0 = read_tree(file, in);
            HkReport r = verify_Hk_key_observation(k, t0);
            out << to_json(r).dump() << "\n";
            return r.certificate.valid ? 0 : 3;
        }
        if (suite->parsed()) {
            if (criterion > 0) {
                CriterionOutcome r = run_criterion(criterion);
                out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << ": "
                    << r.detail << "\n";
                return r.pass ? 0 : 1;
            }
            auto results = run_acceptance_suite(out);
            for (const auto& r : results)
                if (!r.pass) return 1;
            return 0;
        }
        err << "no subcommand handled\n";
        return 1;
    } catch (const ExceptionExit& e) {
        out << e.payload.dump() << "\n";
        return e.code;
    } catch (const TheoremException& e) {
        out << json{{"exception", e.what()}}.dump() << "\n";
        return 2;
    } catch (const InternalCheckError& e) {
        err << "internal check failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace isotree
