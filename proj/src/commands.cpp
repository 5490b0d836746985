#include "asymgraph/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "asymgraph/enumeration.hpp"
#include "asymgraph/report.hpp"

namespace asymgraph {

namespace {

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << path << " for writing\n";
        return false;
    }
    f << content;
    return f.good();
}

}  // namespace

int cmd_construct(const ConstructionSpec& spec, const ConstructOutputs& files,
                  std::ostream& out, std::ostream& err) {
    Graph g;
    try {
        g = spec.build();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    std::string g6 = encode_graph6(g);
    auto cert = certificate_json(spec, g);
    out << g6 << "\n" << cert.dump() << "\n";
    bool ok = true;
    if (!files.graph6_path.empty()) ok &= write_file(files.graph6_path, g6 + "\n", err);
    if (!files.dot_path.empty()) ok &= write_file(files.dot_path, to_dot(g), err);
    if (!files.json_path.empty()) ok &= write_file(files.json_path, cert.dump(2) + "\n", err);
    return ok ? 0 : 1;
}

int cmd_certify(std::istream& in, std::ostream& out, std::ostream& err) {
    std::string line;
    int lineno = 0;
    bool had_error = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            Graph g = decode_graph6(line);
            out << aut_report_json(automorphism_group(g)).dump() << "\n";
        } catch (const std::exception& e) {
            err << "error: line " << lineno << ": " << e.what() << "\n";
            had_error = true;
        }
    }
    return had_error ? 1 : 0;
}

int cmd_census(int n, bool asymmetric_only, const CensusOutputs& files,
               std::ostream& out, std::ostream& err) {
    CensusReport rep;
    try {
        rep = enumerate_cubic_hamiltonian(n);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    out << census_json(rep, asymmetric_only).dump() << "\n";
    bool ok = true;
    if (!files.corpus_path.empty()) {
        std::string corpus;
        for (const auto& e : rep.entries)
            if (!asymmetric_only || e.is_asymmetric) corpus += e.canonical + "\n";
        ok &= write_file(files.corpus_path, corpus, err);
    }
    if (!files.asymmetric_path.empty()) {
        std::string corpus;
        for (const auto& e : rep.entries)
            if (e.is_asymmetric) corpus += e.canonical + "\n";
        ok &= write_file(files.asymmetric_path, corpus, err);
    }
    if (!files.json_path.empty())
        ok &= write_file(files.json_path, census_json(rep, asymmetric_only).dump(2) + "\n", err);
    return ok ? 0 : 1;
}

int cmd_verify_families(int from, int to, std::ostream& out, std::ostream& err) {
    if (from > to || from < 12 || from % 2 != 0 || to % 2 != 0) {
        err << "error: verify requires even 12 <= from <= to\n";
        return 1;
    }
    out << "family               n   regular  hamiltonian  group_order  asymmetric\n";
    bool all_asymmetric = true;
    for (int n = from; n <= to; n += 2) {
        struct Row {
            Family family;
            int want_degree;
        };
        const Row rows[] = {{Family::cubic, 3},
                            {Family::quartic, 4},
                            {Family::complement_cubic, n - 4},
                            {Family::complement_quartic, n - 5}};
        for (const auto& row : rows) {
            ConstructionSpec spec;
            spec.family = row.family;
            spec.n = n;
            Graph g;
            try {
                g = spec.build();
            } catch (const std::exception& e) {
                err << "error: " << family_name(row.family) << " n=" << n << ": " << e.what()
                    << "\n";
                return 1;
            }
            bool regular = g.min_degree() == row.want_degree && g.max_degree() == row.want_degree;
            bool hamiltonian;
            if (row.family == Family::cubic || row.family == Family::quartic)
                hamiltonian = find_hamiltonian_cycle(g).has_value();
            else
                hamiltonian = dirac_guarantees_hamiltonian(g);
            auto aut = automorphism_group(g);
            all_asymmetric &= aut.is_asymmetric && regular && hamiltonian;
            out << std::left << std::setw(20) << family_name(row.family) << " " << std::setw(3)
                << n << " " << std::setw(8) << (regular ? "yes" : "NO") << " " << std::setw(12)
                << (hamiltonian ? "yes" : "NO") << " " << std::setw(12)
                << aut.group_order.to_string() << " " << (aut.is_asymmetric ? "yes" : "NO")
                << "\n";
        }
    }
    out << (all_asymmetric ? "verify: all families asymmetric\n" : "verify: FAILED\n");
    return all_asymmetric ? 0 : 1;
}

int cmd_count_asds(int from, int to, std::ostream& out, std::ostream& err) {
    if (from > to || from < 4) {
        err << "error: count-asds requires 4 <= from <= to\n";
        return 1;
    }
    out << "n    formula  exact  discrepancy\n";
    for (int n = from; n <= to; ++n) {
        AsdsCount c;
        try {
            c = count_asds(n);
        } catch (const std::exception& e) {
            err << "error: n=" << n << ": " << e.what() << "\n";
            return 1;
        }
        out << std::left << std::setw(4) << n << " " << std::setw(8) << c.formula_value << " "
            << std::setw(6) << c.exact_value << " " << c.discrepancy << "\n";
    }
    return 0;
}

int cmd_search_5reg(int n, std::uint64_t seed, std::uint64_t budget, std::ostream& out,
                    std::ostream& err) {
    std::optional<Graph> found;
    try {
        found = search_5regular_asymmetric_hamiltonian(n, seed, budget);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (!found) {
        nlohmann::json j;
        j["schema"] = "asymgraph/search5reg/v1";
        j["found"] = false;
        j["n"] = n;
        j["seed"] = seed;
        j["budget"] = budget;
        out << j.dump() << "\n";
        return 0;
    }
    nlohmann::json j;
    j["schema"] = "asymgraph/search5reg/v1";
    j["found"] = true;
    j["n"] = n;
    j["seed"] = seed;
    j["budget"] = budget;
    j["graph6"] = encode_graph6(*found);
    auto aut = automorphism_group(*found);
    j["group_order"] = group_order_json(aut.group_order);
    j["hamiltonian"] = find_hamiltonian_cycle(*found).has_value();
    out << j.dump() << "\n";
    return 0;
}

int cmd_export_dot(std::istream& in, const std::string& out_dir, std::ostream& out,
                   std::ostream& err) {
    std::string line;
    int index = 0;
    bool had_error = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            Graph g = decode_graph6(line);
            std::ostringstream name;
            name << "g" << std::setw(3) << std::setfill('0') << index;
            std::string dot = to_dot(g, name.str());
            if (out_dir.empty()) {
                out << dot;
            } else {
                if (!write_file(out_dir + "/" + name.str() + ".dot", dot, err)) had_error = true;
            }
        } catch (const std::exception& e) {
            err << "error: graph " << index << ": " << e.what() << "\n";
            had_error = true;
        }
        ++index;
    }
    return had_error ? 1 : 0;
}

}  // namespace asymgraph
