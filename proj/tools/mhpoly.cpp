// mhpoly: mixed Hodge polynomials of representation and character varieties
// of free abelian groups in classical reductive targets.

#include "mhp/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"exact mixed Hodge polynomials for Hom(Z^r, G) and its character variety"};
    app.require_subcommand(1);

    mhp::ComputeOptions compute;
    CLI::App* cmd_compute = app.add_subcommand("compute", "evaluate one invariant");
    cmd_compute->add_option("--group", compute.group, "atom product, e.g. SL:2 or GL:3xGL:1");
    cmd_compute->add_option("--exotic", compute.exotic, "central quotient of SL(p)^m, e.g. p=2,m=1");
    cmd_compute->add_option("--r", compute.r, "free abelian rank (>= 1)")->required();
    cmd_compute->add_option("--kind", compute.kind,
                            "mu_rep | mu_char | mu_char_compact | counting_poly | equivariant_mu | "
                            "poincare | e_poly | euler_char | total_dim");
    cmd_compute->add_option("--vars", compute.vars, "xw | tuv (default tuv)");
    cmd_compute->add_option("--format", compute.format, "plain | latex | records");
    cmd_compute->add_option("--order", compute.order, "truncation order for equivariant_mu");

    mhp::VerifyOptions verify;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run the internal verification suites");
    cmd_verify->add_option("--suite", verify.suite,
                           "weyl | golden | recursion | relations | structure | exotic | all");
    cmd_verify->add_option("--max-n", verify.max_n, "cap the matrix sizes a suite sweeps");
    cmd_verify->add_option("--max-r", verify.max_r, "cap the free abelian ranks a suite sweeps");

    mhp::TableOptions table;
    CLI::App* cmd_table = app.add_subcommand("table", "tabulate invariants over a grid");
    cmd_table->add_option("--groups", table.groups, "family ranges, e.g. SL:2..4,Sp:4")->required();
    cmd_table->add_option("--r", table.r_range, "rank range, e.g. 1..3")->required();
    cmd_table->add_option("--kind", table.kind, "invariant kind (default mu_char)");
    cmd_table->add_option("--vars", table.vars, "xw | tuv (default tuv)");
    cmd_table->add_option("--format", table.format, "plain | latex | records");
    cmd_table->add_option("--out", table.out_path, "output file (default stdout)");
    cmd_table->add_option("--order", table.order, "truncation order for equivariant_mu");

    CLI11_PARSE(app, argc, argv);

    if (cmd_compute->parsed()) return mhp::cmd_compute(compute, std::cout, std::cerr);
    if (cmd_verify->parsed()) return mhp::cmd_verify(verify, std::cout, std::cerr);
    if (cmd_table->parsed()) return mhp::cmd_table(table, std::cout, std::cerr);
    return 1;
}
