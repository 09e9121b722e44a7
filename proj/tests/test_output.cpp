#include "doctest.h"

#include "mhp/cli.hpp"
#include "mhp/invariants.hpp"
#include "mhp/output.hpp"
#include "mhp/weyl.hpp"

#include <sstream>
#include <stdexcept>

using namespace mhp;

namespace {

std::string run_compute(const ComputeOptions& options, int expect_exit = 0) {
    std::ostringstream out, err;
    int code = cmd_compute(options, out, err);
    CHECK(code == expect_exit);
    return expect_exit == 0 ? out.str() : err.str();
}

}  // namespace

TEST_SUITE("output") {

TEST_CASE("records carry the full polynomial and round trip") {
    GroupDescriptor g = GroupDescriptor::parse("SL:2");
    InvariantRequest req{2, InvariantKind::mu_char, VariableMode::xw};
    RationalPoly poly = assemble(g, req);
    nlohmann::ordered_json rec = poly_record(g, req, poly);

    CHECK(rec["family"] == "SL");
    CHECK(rec["n"] == 2);
    CHECK(rec["r"] == 2);
    CHECK(rec["kind"] == "mu_char");
    CHECK(rec["vars"] == nlohmann::json::array({"x"}));
    CHECK(rec["terms"].size() == 2);
    CHECK_FALSE(rec.contains("order"));

    nlohmann::json reparsed = nlohmann::json::parse(rec.dump());
    CHECK(poly_from_record(reparsed) == poly);
}

TEST_CASE("records for compound groups carry the descriptor string") {
    GroupDescriptor g = GroupDescriptor::parse("SL:2xT:1");
    InvariantRequest req{1, InvariantKind::mu_rep, VariableMode::tuv};
    nlohmann::ordered_json rec = poly_record(g, req, assemble(g, req));
    CHECK(rec["family"] == "SL:2xT:1");
    CHECK(rec["n"] == 0);
    CHECK(rec["vars"] == nlohmann::json::array({"t", "u", "v"}));
}

TEST_CASE("equivariant records carry the truncation order") {
    GroupDescriptor g = GroupDescriptor::parse("SL:2");
    InvariantRequest req{1, InvariantKind::equivariant_mu, VariableMode::xw, 6};
    nlohmann::ordered_json rec = poly_record(g, req, assemble(g, req));
    CHECK(rec["order"] == 6);
}

TEST_CASE("malformed records are rejected") {
    CHECK_THROWS_AS(poly_from_record(nlohmann::json::object()), std::invalid_argument);
    nlohmann::json bad = {{"vars", {"x"}}, {"terms", {{"1", {0, 0}}}}};
    CHECK_THROWS_AS(poly_from_record(bad), std::invalid_argument);
}

TEST_CASE("compute command prints canonical text") {
    ComputeOptions options;
    options.group = "SL:2";
    options.r = 3;
    options.kind = "mu_rep";
    options.vars = "xw";
    CHECK(run_compute(options) == "1 + 3*x^2 + 3*x*w + x^3*w\n");

    options.vars = "tuv";
    CHECK(run_compute(options) == "1 + 3*t^2*u^2*v^2 + 3*t^3*u^2*v^2 + t^5*u^4*v^4\n");

    options.format = "latex";
    CHECK(run_compute(options) ==
          "1 + 3t^{2}u^{2}v^{2} + 3t^{3}u^{2}v^{2} + t^{5}u^{4}v^{4}\n");
}

TEST_CASE("compute command handles exotic groups and scalars") {
    ComputeOptions options;
    options.exotic = "p=2,m=1";
    options.r = 2;
    options.kind = "mu_char";
    options.vars = "xw";
    CHECK(run_compute(options) == "2 + x^2\n");

    ComputeOptions euler;
    euler.group = "Sp:4";
    euler.r = 2;
    euler.kind = "euler_char";
    CHECK(run_compute(euler) == "0\n");

    ComputeOptions total;
    total.group = "SL:2";
    total.r = 2;
    total.kind = "total_dim";
    CHECK(run_compute(total) == "4\n");
}

TEST_CASE("compute command rejects bad requests") {
    ComputeOptions none;
    CHECK(run_compute(none, 1).find("exactly one") != std::string::npos);

    ComputeOptions both;
    both.group = "SL:2";
    both.exotic = "p=2,m=1";
    CHECK(run_compute(both, 1).find("exactly one") != std::string::npos);

    ComputeOptions bad_group;
    bad_group.group = "SO:3";
    CHECK(run_compute(bad_group, 1).find("SO:3") != std::string::npos);

    ComputeOptions bad_exotic;
    bad_exotic.exotic = "p=4,m=1";
    CHECK(run_compute(bad_exotic, 1).find("prime") != std::string::npos);

    ComputeOptions bad_kind;
    bad_kind.group = "SL:2";
    bad_kind.kind = "betti";
    CHECK(run_compute(bad_kind, 1).find("betti") != std::string::npos);
}

TEST_CASE("verify command reports suites") {
    std::ostringstream out, err;
    CHECK(cmd_verify(VerifyOptions{"golden"}, out, err) == 0);
    CHECK(out.str().find("ok golden") == 0);

    std::ostringstream out2, err2;
    CHECK(cmd_verify(VerifyOptions{"nonsense"}, out2, err2) == 1);
}

TEST_CASE("verify command honors size caps") {
    std::ostringstream full_out, capped_out, err;
    CHECK(cmd_verify(VerifyOptions{"recursion"}, full_out, err) == 0);
    CHECK(cmd_verify(VerifyOptions{"recursion", 3, 2}, capped_out, err) == 0);
    CHECK(capped_out.str().find("ok recursion") == 0);
    // Shrinking the grid shrinks the check count, and the capped run is a
    // strict subset so it still passes.
    CHECK(capped_out.str() != full_out.str());

    std::ostringstream out3, err3;
    CHECK(cmd_verify(VerifyOptions{"weyl", -1, 0}, out3, err3) == 1);
    CHECK(err3.str().find("nonnegative") != std::string::npos);
}

TEST_CASE("table command output is deterministic") {
    TableOptions options;
    options.groups = "SL:2..4";
    options.r_range = "1..3";
    options.kind = "mu_char";
    options.vars = "xw";

    std::ostringstream first, second, err;
    CHECK(cmd_table(options, first, err) == 0);
    CHECK(cmd_table(options, second, err) == 0);
    CHECK(first.str() == second.str());

    // One header line, then 3 groups x 3 ranks, one line each.
    std::istringstream lines(first.str());
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 10);
    CHECK(first.str().rfind("# group\tr\tmu_char[xw]\n", 0) == 0);
}

TEST_CASE("empty table grid still writes the header") {
    TableOptions options;
    options.groups = "";
    options.r_range = "1..3";

    std::ostringstream out, err;
    CHECK(cmd_table(options, out, err) == 0);
    CHECK(out.str() == "# group\tr\tmu_char[tuv]\n");

    // The records format has no header, so the file is empty.
    options.format = "records";
    std::ostringstream out2, err2;
    CHECK(cmd_table(options, out2, err2) == 0);
    CHECK(out2.str().empty());

    // Bad kind and format names are rejected even on an empty grid.
    TableOptions bad_kind;
    bad_kind.r_range = "1";
    bad_kind.kind = "betti";
    std::ostringstream out3, err3;
    CHECK(cmd_table(bad_kind, out3, err3) == 1);
    CHECK(err3.str().find("betti") != std::string::npos);

    TableOptions bad_format;
    bad_format.r_range = "1";
    bad_format.format = "csv";
    std::ostringstream out4, err4;
    CHECK(cmd_table(bad_format, out4, err4) == 1);
    CHECK(err4.str().find("csv") != std::string::npos);
}

TEST_CASE("table records parse line by line") {
    TableOptions options;
    options.groups = "Sp:2..4,T:1";
    options.r_range = "2";
    options.kind = "mu_rep";
    options.vars = "xw";
    options.format = "records";

    std::ostringstream out, err;
    CHECK(cmd_table(options, out, err) == 0);
    std::istringstream lines(out.str());
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        nlohmann::json rec = nlohmann::json::parse(line);
        RationalPoly poly = poly_from_record(rec);
        CHECK_FALSE(poly.is_zero());
        ++count;
    }
    CHECK(count == 3);
}

}
