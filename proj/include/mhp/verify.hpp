#ifndef MHP_VERIFY_HPP
#define MHP_VERIFY_HPP

// Self-contained verification suites, callable from the command line and
// from the test binaries.  Each suite returns the list of failed checks;
// an empty list means the suite passed.

#include "mhp/rational_poly.hpp"

#include <string>
#include <vector>

namespace mhp {

struct SuiteResult {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

// Closed-form reference expressions for small groups, entered as literal
// coefficient strings independent of the class-sum engine, in (x, w).
RationalPoly sl2_rep_reference(int r);
RationalPoly sl3_rep_reference(int r);
RationalPoly sl4_rep_reference(int r);
RationalPoly sp4_rep_reference(int r);

std::vector<std::string> suite_names();

// Optional size caps for the suite grids.  Zero keeps a suite's default
// bound; a positive cap only ever shrinks a grid, never grows it past the
// sizes the checks were written for.
struct SuiteCaps {
    int max_n = 0;
    int max_r = 0;
};

// Runs one named suite ("all" runs every suite and concatenates failures).
// Throws std::invalid_argument for an unknown name.
std::vector<SuiteResult> run_suites(const std::string& name, SuiteCaps caps = {});

}  // namespace mhp

#endif
