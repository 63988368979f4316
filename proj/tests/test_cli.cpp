#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "ybx/constructors.hpp"
#include "ybx/grammar.hpp"
#include "ybx/json_io.hpp"

using namespace ybx;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(YBX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("cli exit codes") {
    CHECK(run_cli("check qybe --object rp --n 4").exit_code == 0);
    CHECK(run_cli("check qybe --object identity-plus-junk --n 2").exit_code == 1);
    CHECK(run_cli("check qybe --object no-such-thing --n 2").exit_code == 2);
    CHECK(run_cli("check bogus --n 2").exit_code == 2);
    CHECK(run_cli("build rp").exit_code == 2);            // --n is required
    CHECK(run_cli("build rp --n 0").exit_code == 2);      // n >= 1
    CHECK(run_cli("check dbe --n 2 --sign -1").exit_code == 1);
    CHECK(run_cli("dyn dbe --n 2").exit_code == 0);
    CHECK(run_cli("dyn irf --n 2 --sign -1").exit_code == 1);
    CHECK(run_cli("check boundary-limit --n 2").exit_code == 0);
    CHECK(run_cli("check bcg-vs-rp --n 3").exit_code == 0);
    CHECK(run_cli("check formula-vs-operator --n 4").exit_code == 0);
    CHECK(run_cli("check twist-lemma --n 2").exit_code == 0);
    CHECK(run_cli("check nilpotent --n 5").exit_code == 0);
    CHECK(run_cli("check unitary --object q-modified --n 2").exit_code == 0);
    CHECK(run_cli("check qybe --object cg --n 2").exit_code == 0);
}

TEST_CASE("build round-trip is byte-identical") {
    for (const char* args : {"rp --n 2", "rp-formula --n 3", "qp --n 2", "boundary --n 2",
                             "dyn-r --n 2", "irf-A --n 3", "bcg --n 3", "q-modified --n 2"}) {
        RunResult first = run_cli(std::string("build ") + args);
        REQUIRE(first.exit_code == 0);
        TensorMat parsed = tensor_from_json(first.out);
        CHECK(tensor_to_json(parsed) + "\n" == first.out);
    }
}

TEST_CASE("build fixtures") {
    // rp at h = 0 is the identity
    RunResult at0 = run_cli("build rp --n 3 --at h=0");
    REQUIRE(at0.exit_code == 0);
    TensorMat m = tensor_from_json(at0.out);
    CHECK(m == TensorMat::identity(3, 2, VarContext({"h"})));

    // exact parameter values go in as strings
    RunResult third = run_cli("build rp --n 2 --h 1/3");
    REQUIRE(third.exit_code == 0);
    TensorMat t = tensor_from_json(third.out);
    CHECK(t.get({1, 1}, {2, 1}) == parse_ratfunc(VarContext({"h"}), "-1/3"));

    // dynamical ring names
    RunResult dyn = run_cli("build dyn-r --n 2");
    REQUIRE(dyn.exit_code == 0);
    CHECK(tensor_from_json(dyn.out).ring() == VarContext({"nu1", "nu2"}));

    // latex output opens a pmatrix
    RunResult latex = run_cli("build classical-rp --n 2 --format latex");
    REQUIRE(latex.exit_code == 0);
    CHECK(latex.out.rfind("\\begin{pmatrix}", 0) == 0);

    // machine-readable check reports carry the witness
    RunResult rep = run_cli("check mqybe --object qp --n 2 --json");
    CHECK(rep.exit_code == 0);
    CHECK(rep.out.find("\"is_zero\": true") != std::string::npos);
}

TEST_CASE("operator JSON round-trip") {
    const VarContext ctx = op_context({"h"});
    const FieldOp rp = make_rp_op(ctx, 3, RatFunc::variable(ctx, 2));
    const std::string text = fieldop_to_json(rp);
    const FieldOp back = fieldop_from_json(text);
    CHECK(op_equal(back, rp, 3));
    CHECK(fieldop_to_json(back) == text);

    // the swap flag serializes the affine pair on the landing variable
    const FieldOp cg = make_cg_op(op_context({"p", "q"}));
    const FieldOp cg_back = fieldop_from_json(fieldop_to_json(cg));
    CHECK(op_equal(cg_back, cg, 2));
}
