#ifndef ASYMGRAPH_COMMANDS_HPP
#define ASYMGRAPH_COMMANDS_HPP

#include <iosfwd>
#include <string>

#include "asymgraph/constructions.hpp"

namespace asymgraph {

/// Command implementations behind the CLI. Data goes to `out`, diagnostics to
/// `err`; the return value is the process exit status. Empty path = skip.
struct ConstructOutputs {
    std::string graph6_path;  // graph6 line
    std::string dot_path;     // DOT document
    std::string json_path;    // certificate
};

/// Prints the graph6 line and the JSON certificate to `out`, then writes any
/// requested files.
int cmd_construct(const ConstructionSpec& spec, const ConstructOutputs& files,
                  std::ostream& out, std::ostream& err);

/// One aut-report JSON object per graph6 input line, in input order.
/// Malformed lines are skipped with a diagnostic and make the exit nonzero.
int cmd_certify(std::istream& in, std::ostream& out, std::ostream& err);

struct CensusOutputs {
    std::string corpus_path;      // all representatives, one graph6 per line
    std::string asymmetric_path;  // asymmetric subset
    std::string json_path;
};

int cmd_census(int n, bool asymmetric_only, const CensusOutputs& files,
               std::ostream& out, std::ostream& err);

/// Regularity / Hamiltonicity / group-order table for the four families over
/// even n in [from, to]. Exit 0 iff every row is asymmetric.
int cmd_verify_families(int from, int to, std::ostream& out, std::ostream& err);

/// Table of {n, formula, exact, discrepancy} rows for n in [from, to].
int cmd_count_asds(int from, int to, std::ostream& out, std::ostream& err);

/// Runs the randomized 5-regular search; prints a found/not-found JSON and,
/// when found, the graph6 line and certificate.
int cmd_search_5reg(int n, std::uint64_t seed, std::uint64_t budget,
                    std::ostream& out, std::ostream& err);

/// Reads graph6 lines, emits one DOT document per graph. With a non-empty
/// out_dir, writes g000.dot, g001.dot, ... instead of streaming to `out`.
int cmd_export_dot(std::istream& in, const std::string& out_dir,
                   std::ostream& out, std::ostream& err);

}  // namespace asymgraph

#endif
