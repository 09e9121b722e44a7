#include "mhp/cli.hpp"

#include "mhp/invariants.hpp"
#include "mhp/output.hpp"
#include "mhp/verify.hpp"
#include "mhp/weyl.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mhp {

namespace {

long parse_long(const std::string& text, const std::string& token) {
    try {
        std::size_t used = 0;
        long value = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad token '" + token + "': expected an integer");
    }
}

// "p=2,m=1" -> descriptor with m SL(p) atoms and the quotient marker.
GroupDescriptor parse_exotic(const std::string& text) {
    long p = 0, m = 0;
    bool have_p = false, have_m = false;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        std::size_t eq = piece.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad token '" + piece + "': expected p=... or m=...");
        std::string key = piece.substr(0, eq);
        long value = parse_long(piece.substr(eq + 1), piece);
        if (key == "p") {
            p = value;
            have_p = true;
        } else if (key == "m") {
            m = value;
            have_m = true;
        } else {
            throw std::invalid_argument("bad token '" + piece + "': unknown key '" + key + "'");
        }
    }
    if (!have_p || !have_m)
        throw std::invalid_argument("central quotient needs both p= and m= ('" + text + "')");
    GroupDescriptor g;
    for (long i = 0; i < m; ++i) g.atoms.push_back({AtomKind::sl, static_cast<int>(p)});
    g.quotient = GroupDescriptor::CentralQuotient{p, m};
    return g;
}

std::string render(const GroupDescriptor& group, const InvariantRequest& request,
                   const RationalPoly& poly, const std::string& format) {
    if (!poly.has_integer_coefficients())
        throw std::domain_error("refusing to print non-integer coefficients; "
                                "the invariant evaluation is corrupted");
    if (format == "plain") return to_plain(poly);
    if (format == "latex") return to_latex(poly);
    if (format == "records") return poly_record(group, request, poly).dump();
    throw std::invalid_argument("unknown format '" + format + "' (expected plain, latex, or records)");
}

InvariantRequest build_request(int r, const std::string& kind, const std::string& vars,
                               unsigned order) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    InvariantRequest request;
    request.rank_r = r;
    request.kind = parse_invariant_kind(kind);
    request.mode = parse_variable_mode(vars);
    request.series_order = order;
    return request;
}

struct TableRow {
    GroupDescriptor group;
    int r;
};

// "SL:2..4" -> the atoms SL:2, SL:3, SL:4; Sp ranges step by two.
void expand_family_range(const std::string& token, std::vector<GroupDescriptor>& out) {
    std::size_t colon = token.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad token '" + token + "': expected FAMILY:RANGE");
    std::string range = token.substr(colon + 1);
    std::size_t dots = range.find("..");
    long lo, hi;
    if (dots == std::string::npos) {
        lo = hi = parse_long(range, token);
    } else {
        lo = parse_long(range.substr(0, dots), token);
        hi = parse_long(range.substr(dots + 2), token);
    }
    if (lo > hi) throw std::invalid_argument("bad token '" + token + "': empty range");
    long step = 1;
    if (token.substr(0, colon) == "Sp") {
        if (lo % 2 != 0 || hi % 2 != 0)
            throw std::invalid_argument("bad token '" + token + "': Sp sizes must be even");
        step = 2;
    }
    for (long size = lo; size <= hi; size += step)
        out.push_back(GroupDescriptor::parse(token.substr(0, colon) + ":" + std::to_string(size)));
}

}  // namespace

int cmd_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (options.group.empty() == options.exotic.empty())
            throw std::invalid_argument("exactly one of --group and --exotic is required");
        GroupDescriptor group = options.group.empty() ? parse_exotic(options.exotic)
                                                      : GroupDescriptor::parse(options.group);
        InvariantRequest request =
            build_request(options.r, options.kind, options.vars, options.order);
        RationalPoly poly = assemble(group, request);
        out << render(group, request, poly, options.format) << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    try {
        bool all_passed = true;
        SuiteCaps caps{options.max_n, options.max_r};
        for (const SuiteResult& suite : run_suites(options.suite, caps)) {
            if (suite.passed()) {
                out << "ok " << suite.name << " (" << suite.checks << " checks)\n";
            } else {
                all_passed = false;
                out << "FAIL " << suite.name << " (" << suite.failures.size() << " of "
                    << suite.checks << " checks failed)\n";
                for (const auto& failure : suite.failures) out << "  " << failure << "\n";
            }
        }
        return all_passed ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err) {
    try {
        // An empty group list is a degenerate but valid grid; the header
        // still goes out so the file identifies its own columns.
        std::vector<GroupDescriptor> groups;
        std::istringstream in(options.groups);
        std::string token;
        while (std::getline(in, token, ',')) expand_family_range(token, groups);
        long r_lo, r_hi;
        std::size_t dots = options.r_range.find("..");
        if (dots == std::string::npos) {
            r_lo = r_hi = parse_long(options.r_range, options.r_range);
        } else {
            r_lo = parse_long(options.r_range.substr(0, dots), options.r_range);
            r_hi = parse_long(options.r_range.substr(dots + 2), options.r_range);
        }
        if (r_lo < 1 || r_lo > r_hi)
            throw std::invalid_argument("bad r range '" + options.r_range + "'");
        // Reject bad kind and variable names even when the grid is empty.
        parse_invariant_kind(options.kind);
        parse_variable_mode(options.vars);

        std::ostringstream body;
        if (options.format == "plain") {
            body << "# group\tr\t" << options.kind << "[" << options.vars << "]\n";
        } else if (options.format == "latex") {
            body << "% group & r & " << options.kind << "[" << options.vars << "]\n";
        } else if (options.format != "records") {
            throw std::invalid_argument("unknown format '" + options.format + "'");
        }
        for (const auto& group : groups) {
            for (long r = r_lo; r <= r_hi; ++r) {
                InvariantRequest request =
                    build_request(static_cast<int>(r), options.kind, options.vars, options.order);
                RationalPoly poly = assemble(group, request);
                if (options.format == "latex") {
                    body << group.str() << " & " << r << " & $"
                         << render(group, request, poly, "latex") << "$ \\\\\n";
                } else if (options.format == "records") {
                    body << render(group, request, poly, "records") << "\n";
                } else {
                    body << group.str() << "\tr=" << r << "\t"
                         << render(group, request, poly, "plain") << "\n";
                }
            }
        }
        if (options.out_path.empty()) {
            out << body.str();
        } else {
            std::ofstream file(options.out_path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open '" + options.out_path + "'");
            file << body.str();
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace mhp
