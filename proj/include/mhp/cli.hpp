#ifndef MHP_CLI_HPP
#define MHP_CLI_HPP

// Command implementations behind the mhpoly tool, separated from argument
// parsing so tests can drive them directly.  Each returns a process exit
// code and writes results to out, diagnostics to err.

#include <iosfwd>
#include <string>

namespace mhp {

struct ComputeOptions {
    std::string group;   // atom product, e.g. "SL:2" or "GL:3xGL:1"
    std::string exotic;  // central quotient, e.g. "p=2,m=1"; excludes group
    int r = 1;
    std::string kind = "mu_rep";
    std::string vars = "tuv";
    std::string format = "plain";  // plain | latex | records
    unsigned order = 20;           // equivariant truncation
};

int cmd_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    std::string suite = "all";
    int max_n = 0;  // 0 keeps each suite's default grid
    int max_r = 0;
};

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct TableOptions {
    std::string groups;   // comma list of family ranges, e.g. "SL:2..4,Sp:4"
    std::string r_range;  // "1..3" or a single integer
    std::string kind = "mu_char";
    std::string vars = "tuv";
    std::string format = "plain";
    std::string out_path;  // empty writes to out
    unsigned order = 20;
};

int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err);

}  // namespace mhp

#endif
