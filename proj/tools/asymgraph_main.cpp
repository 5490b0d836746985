// Command-line front end: construct | certify | census | verify | count-asds
// | search-5reg | export-dot. Data on stdout, diagnostics on stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "asymgraph/commands.hpp"
#include "asymgraph/report.hpp"

using namespace asymgraph;

int main(int argc, char** argv) {
    CLI::App app{"asymgraph: asymmetric graph families, certification and enumeration"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a named family member");
    std::string family_str, recipe_path, arms_str;
    int construct_n = 0;
    std::uint64_t construct_seed = 0, construct_budget = 0;
    ConstructOutputs construct_files;
    construct->add_option("family", family_str,
                          "subdivided-star | fig3-tree | cubic | quartic | "
                          "complement-cubic | complement-quartic");
    construct->add_option("--n", construct_n, "vertex count (even >= 12 for the families)");
    construct->add_option("--arms", arms_str, "comma-separated pendant path lengths");
    construct->add_option("--seed", construct_seed, "seed (search families)");
    construct->add_option("--budget", construct_budget, "trial budget (search families)");
    construct->add_option("--recipe", recipe_path, "JSON recipe file {family, n, arms, seed, budget}");
    construct->add_option("--g6-out", construct_files.graph6_path, "write the graph6 line here");
    construct->add_option("--dot-out", construct_files.dot_path, "write a DOT document here");
    construct->add_option("--json-out", construct_files.json_path, "write the certificate here");

    // certify
    auto* certify = app.add_subcommand("certify", "automorphism reports for graph6 input");
    std::string certify_input;
    certify->add_option("--in", certify_input, "graph6 file, one graph per line (default stdin)");

    // census
    auto* census = app.add_subcommand("census", "cubic Hamiltonian census on n vertices");
    int census_n = 0;
    bool census_asym_only = false;
    CensusOutputs census_files;
    census->add_option("--n", census_n, "vertex count (even, 4..16)")->required();
    census->add_flag("--asymmetric-only", census_asym_only, "list only asymmetric representatives");
    census->add_option("--corpus-out", census_files.corpus_path, "graph6 corpus path");
    census->add_option("--asym-out", census_files.asymmetric_path, "asymmetric corpus path");
    census->add_option("--json-out", census_files.json_path, "census report path");

    // verify
    auto* verify = app.add_subcommand("verify", "check the four families over a range of n");
    int verify_from = 0, verify_to = 0;
    verify->add_option("--from", verify_from, "first n (even, >= 12)")->required();
    verify->add_option("--to", verify_to, "last n (even)")->required();

    // count-asds
    auto* asds = app.add_subcommand("count-asds", "asymmetric subdivided star counts");
    int asds_from = 0, asds_to = 0;
    asds->add_option("--from", asds_from, "first n (>= 4)")->required();
    asds->add_option("--to", asds_to, "last n")->required();

    // search-5reg
    auto* search5 = app.add_subcommand("search-5reg", "randomized 5-regular asymmetric search");
    int search_n = 12;
    std::uint64_t search_seed = 1, search_budget = 1000;
    search5->add_option("--n", search_n, "vertex count (even >= 12)");
    search5->add_option("--seed", search_seed, "RNG seed");
    search5->add_option("--budget", search_budget, "trial budget");

    // export-dot
    auto* exportdot = app.add_subcommand("export-dot", "graph6 lines to DOT documents");
    std::string export_input, export_dir;
    exportdot->add_option("--in", export_input, "graph6 file (default stdin)");
    exportdot->add_option("--out-dir", export_dir, "write g000.dot, g001.dot, ... here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            ConstructionSpec spec;
            if (!recipe_path.empty()) {
                std::ifstream f(recipe_path);
                if (!f) {
                    std::cerr << "error: cannot read recipe " << recipe_path << "\n";
                    return 1;
                }
                nlohmann::json j;
                f >> j;
                spec = construction_spec_from_json(j);
            } else {
                if (family_str.empty()) {
                    std::cerr << "error: construct needs a family or --recipe\n";
                    return 1;
                }
                spec.family = family_from_name(family_str);
                spec.n = construct_n;
                spec.seed = construct_seed;
                spec.budget = construct_budget;
                if (!arms_str.empty()) {
                    std::stringstream ss(arms_str);
                    std::string tok;
                    while (std::getline(ss, tok, ',')) spec.arms.push_back(std::stoi(tok));
                }
                spec.validate();
            }
            return cmd_construct(spec, construct_files, std::cout, std::cerr);
        }
        if (certify->parsed()) {
            if (certify_input.empty()) return cmd_certify(std::cin, std::cout, std::cerr);
            std::ifstream f(certify_input);
            if (!f) {
                std::cerr << "error: cannot read " << certify_input << "\n";
                return 1;
            }
            return cmd_certify(f, std::cout, std::cerr);
        }
        if (census->parsed())
            return cmd_census(census_n, census_asym_only, census_files, std::cout, std::cerr);
        if (verify->parsed()) return cmd_verify_families(verify_from, verify_to, std::cout, std::cerr);
        if (asds->parsed()) return cmd_count_asds(asds_from, asds_to, std::cout, std::cerr);
        if (search5->parsed())
            return cmd_search_5reg(search_n, search_seed, search_budget, std::cout, std::cerr);
        if (exportdot->parsed()) {
            if (export_input.empty())
                return cmd_export_dot(std::cin, export_dir, std::cout, std::cerr);
            std::ifstream f(export_input);
            if (!f) {
                std::cerr << "error: cannot read " << export_input << "\n";
                return 1;
            }
            return cmd_export_dot(f, export_dir, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
