#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "ybx/dynamical.hpp"
#include "ybx/grammar.hpp"
#include "ybx/json_io.hpp"
#include "ybx/verifiers.hpp"

using namespace ybx;

namespace {

/// Everything one invocation asked for: the command, exact parameter
/// strings, convention flags, and the output format.
struct Manifest {
    std::string command;  // "build" or "check"
    std::string object;   // build target or checked object
    std::string check;    // check name
    int n = 2;
    int sign = +1;
    std::map<std::string, std::string> params;      // kappa/h/p/q as exact strings
    std::vector<std::string> at;                    // var=value substitutions
    std::string format = "json";                    // json | latex
    std::string out;                                // output path, empty = stdout
    bool json_report = false;

    void validate() const {
        if (n < 1) throw CLI::ValidationError("--n must be at least 1");
        if (sign != 1 && sign != -1) throw CLI::ValidationError("--sign must be +1 or -1");
        if (format != "json" && format != "latex")
            throw CLI::ValidationError("--format must be json or latex");
    }
};

TensorMat apply_at(TensorMat m, const std::vector<std::string>& at) {
    for (const auto& item : at) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("--at expects var=value, got \"" + item + "\"");
        const std::string var = item.substr(0, eq);
        const std::size_t idx = m.ring().require(var);
        const RatFunc value = parse_ratfunc(m.ring(), item.substr(eq + 1));
        std::map<std::size_t, RatFunc> sub;
        sub.emplace(idx, value);
        m = m.map_entries([&](const RatFunc& v) { return v.substitute(sub); });
    }
    return m;
}

/// Parameter value for `name`: defaults to the symbol itself.
RatFunc param_value(const Manifest& mf, const VarContext& ctx, const std::string& name) {
    auto it = mf.params.find(name);
    const std::string& text = it == mf.params.end() ? name : it->second;
    return parse_ratfunc(ctx, text);
}

TensorMat build_object(const Manifest& mf) {
    const std::string& obj = mf.object;
    if (obj == "rp") {
        const VarContext ctx = op_context({"h"});
        return restrict_to(make_rp_op(ctx, mf.n, param_value(mf, ctx, "h")), mf.n);
    }
    if (obj == "rp-formula") return rp_matrix_formula(mf.n);
    if (obj == "classical-rp") return classical_rp(mf.n);
    if (obj == "bcg") return b_cg(mf.n);
    if (obj == "cg") return restrict_to(make_cg_op(op_context({"p", "q"})), mf.n);
    if (obj == "q-modified") {
        TensorMat cg = restrict_to(make_cg_op(op_context({"p", "q"})), mf.n);
        return hecke_to_mqybe(cg, cg.ring().require("q")).first;
    }
    if (obj == "qp") return restrict_to(make_qp_op(op_context({"p"}), mf.n), mf.n);
    if (obj == "boundary")
        return restrict_to(make_boundary_op(op_context({"p", "h"}), mf.n), mf.n);
    if (obj == "dyn-r") return make_dyn_r(mf.n).mat;
    if (obj == "irf-A") return make_A(mf.n).mat;
    throw CLI::ValidationError("unknown object \"" + obj + "\"");
}

int run_build(const Manifest& mf) {
    TensorMat m = apply_at(build_object(mf), mf.at);
    std::string text = mf.format == "latex" ? tensor_to_latex(m) : tensor_to_json(m);
    text += "\n";
    if (mf.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(mf.out, std::ios::binary);
        if (!f) throw Error("cannot open \"" + mf.out + "\" for writing");
        f << text;
    }
    return 0;
}

RatFunc standard_lambda(const VarContext& ring, int n) {
    const RatFunc p = RatFunc::variable(ring, ring.require("p"));
    const RatFunc one = RatFunc::one(ring);
    return (one - p.pow(n)).pow(2) / (one + p.pow(n)).pow(2);
}

TensorMat checked_matrix(const Manifest& mf, const std::string& fallback) {
    const std::string obj = mf.object.empty() ? fallback : mf.object;
    if (obj == "identity") return TensorMat::identity(mf.n, 2, VarContext());
    if (obj == "identity-plus-junk") {
        if (mf.n != 2) throw CLI::ValidationError("identity-plus-junk is a 2x2 example");
        TensorMat m = TensorMat::identity(2, 2, VarContext());
        m.add_to({1, 2}, {2, 1}, RatFunc::one(VarContext()));
        return m;
    }
    Manifest sub = mf;
    sub.object = obj;
    return build_object(sub);
}

struct CheckOutcome {
    Residual residual;
    std::string note; // extra human-readable detail (recorded scalar etc.)
};

CheckOutcome run_check_impl(const Manifest& mf) {
    const std::string& c = mf.check;
    if (c == "qybe") return {qybe_residual(checked_matrix(mf, "rp")), {}};
    if (c == "mqybe") {
        TensorMat m = checked_matrix(mf, "qp");
        if (mf.object == "q-modified") {
            // lambda in terms of q, before q^2 = p^n is imposed
            const RatFunc q = RatFunc::variable(m.ring(), m.ring().require("q"));
            const RatFunc one = RatFunc::one(m.ring());
            RatFunc lambda = (one - q * q).pow(2) / (one + q * q).pow(2);
            return {mqybe_residual(m, lambda), {}};
        }
        return {mqybe_residual(m, standard_lambda(m.ring(), mf.n)), {}};
    }
    if (c == "cybe") {
        TensorMat m = checked_matrix(mf, "classical-rp");
        return {cybe_residual(m, RatFunc::zero(m.ring())), {}};
    }
    if (c == "hecke") {
        TensorMat m = checked_matrix(mf, "cg");
        return {hecke_residual(m, m.ring().require("q")), {}};
    }
    if (c == "unitary") return {unitarity_residual(checked_matrix(mf, "qp")), {}};
    if (c == "nilpotent") {
        TensorMat r = restrict_to(make_nilpotent_r_op(op_context({})), mf.n);
        return {residual_of(r * r), {}};
    }
    if (c == "twist-lemma") {
        const VarContext ctx = op_context({"p", "kappa"});
        const FieldOp R = make_rational_r_op(ctx, RatFunc::variable(ctx, 3));
        const FieldOp Ftw = make_additive_twist(ctx, RatFunc::variable(ctx, 2));
        FieldOp Pop(ctx, 2);
        Pop.add_term(RatFunc::one(ctx), Pop.swap_map(0, 1));
        const FieldOp F21 = compose(Pop, compose(Ftw, Pop));
        const FieldOp f12 = embed_leg(Ftw, 12), f13 = embed_leg(Ftw, 13), f23 = embed_leg(Ftw, 23);
        const FieldOp r12 = embed_leg(R, 12), r23 = embed_leg(R, 23);
        Residual res = op_residual(compose(F21, Ftw), FieldOp::identity(ctx, 2), mf.n);
        if (res.is_zero)
            res = op_residual(compose(f12, compose(f13, f23)), compose(f23, compose(f13, f12)), mf.n);
        if (res.is_zero)
            res = op_residual(compose(r12, compose(f23, f13)), compose(f13, compose(f23, r12)), mf.n);
        if (res.is_zero)
            res = op_residual(compose(r23, compose(f12, f13)), compose(f13, compose(f12, r23)), mf.n);
        return {std::move(res), {}};
    }
    if (c == "semiclassical") {
        const VarContext ctx = op_context({"h"});
        TensorMat rp = restrict_to(make_rp_op(ctx, mf.n, RatFunc::variable(ctx, 2)), mf.n);
        auto [order0, order1] = semiclassical(rp, 0);
        TensorMat diff0 = order0 - TensorMat::identity(mf.n, 2, order0.ring());
        if (!diff0.is_zero()) return {residual_of(std::move(diff0)), "order 0 differs from I"};
        TensorMat diff1 = order1 - classical_rp(mf.n).transport_ring(order1.ring());
        return {residual_of(std::move(diff1)), {}};
    }
    if (c == "similarity") return {similarity_check(mf.n), {}};
    if (c == "boundary-limit") return {boundary_limit(mf.n), {}};
    if (c == "dbe") return {dbe_residual(make_dyn_r(mf.n), mf.sign), {}};
    if (c == "irf") return {vertex_irf_residual(mf.n, mf.sign), {}};
    if (c == "formula-vs-operator") {
        const VarContext ctx = op_context({"h"});
        TensorMat lhs = rp_matrix_formula(mf.n);
        TensorMat rhs = restrict_to(make_rp_op(ctx, mf.n, RatFunc::variable(ctx, 2)), mf.n);
        return {residual_of(lhs - rhs), {}};
    }
    if (c == "bcg-vs-rp") {
        TensorMat lhs = phi_map(b_cg(mf.n));
        TensorMat rhs = classical_rp(mf.n);
        if (lhs.is_zero() && rhs.is_zero()) return {Residual{}, "both zero"};
        auto w = first_nonzero(lhs);
        if (!w) return {residual_of(std::move(rhs)), "phi image is zero, classical matrix is not"};
        RatFunc scalar = rhs.get(w->row, w->col) / w->value;
        if (scalar.is_zero()) return {residual_of(std::move(rhs)), "no matching scalar"};
        TensorMat scaled = lhs;
        scaled.scale(scalar);
        return {residual_of(scaled - rhs), "scalar " + to_string(scalar)};
    }
    throw CLI::ValidationError("unknown check \"" + c + "\"");
}

int run_check(const Manifest& mf) {
    CheckOutcome outcome = run_check_impl(mf);
    const Residual& res = outcome.residual;
    if (mf.json_report) {
        nlohmann::json j;
        j["check"] = mf.check;
        j["n"] = mf.n;
        j["sign"] = mf.sign;
        if (!mf.object.empty()) j["object"] = mf.object;
        j["is_zero"] = res.is_zero;
        if (res.witness) {
            nlohmann::json w;
            w["row"] = res.witness->row;
            w["col"] = res.witness->col;
            w["value"] = to_string(res.witness->value);
            j["witness"] = std::move(w);
        } else {
            j["witness"] = nullptr;
        }
        if (!outcome.note.empty()) j["note"] = outcome.note;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "check " << mf.check << " n=" << mf.n;
        if (!mf.object.empty()) std::cout << " object=" << mf.object;
        std::cout << ": " << (res.is_zero ? "zero residual" : "NONZERO residual");
        if (!outcome.note.empty()) std::cout << " (" << outcome.note << ")";
        std::cout << "\n";
        if (res.witness) {
            std::cout << "  first witness: row (";
            for (std::size_t i = 0; i < res.witness->row.size(); ++i)
                std::cout << (i ? "," : "") << res.witness->row[i];
            std::cout << ") col (";
            for (std::size_t i = 0; i < res.witness->col.size(); ++i)
                std::cout << (i ? "," : "") << res.witness->col[i];
            std::cout << ") value " << to_string(res.witness->value) << "\n";
        }
    }
    return res.is_zero ? 0 : 1;
}

void add_param_options(CLI::App* cmd, Manifest& mf) {
    cmd->add_option("--n", mf.n, "dimension of V_n per leg")->required();
    for (const char* name : {"kappa", "h", "p", "q"}) {
        cmd->add_option_function<std::string>(
            std::string("--") + name,
            [&mf, name](const std::string& v) { mf.params[name] = v; },
            std::string("exact value for ") + name + " (default: the symbol itself)");
    }
    cmd->add_option("--sign", mf.sign, "weight-shift sign convention (+1 or -1)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification of generalized Jordanian and "
                 "Cremmer-Gervais R-matrices"};
    app.set_help_flag("--help", "print help"); // --h is the parameter h
    app.require_subcommand(1);

    Manifest mf;

    CLI::App* build = app.add_subcommand("build", "construct a named matrix and print it");
    build->add_option("object", mf.object,
                      "rp | rp-formula | classical-rp | bcg | cg | q-modified | qp | boundary | "
                      "dyn-r | irf-A")
        ->required();
    add_param_options(build, mf);
    build->add_option("--at", mf.at, "substitute var=value in the result (repeatable)");
    build->add_option("--format", mf.format, "json | latex");
    build->add_option("--out", mf.out, "write to a file instead of stdout");

    CLI::App* check = app.add_subcommand("check", "run a verifier and report its residual");
    check->add_option("name", mf.check,
                      "qybe | mqybe | cybe | hecke | unitary | nilpotent | twist-lemma | "
                      "semiclassical | similarity | boundary-limit | dbe | irf | "
                      "formula-vs-operator | bcg-vs-rp")
        ->required();
    check->add_option("--object", mf.object, "which matrix to check (where applicable)");
    add_param_options(check, mf);
    check->add_flag("--json", mf.json_report, "machine-readable report");

    CLI::App* dyn = app.add_subcommand("dyn", "dynamical checks");
    dyn->require_subcommand(1);
    CLI::App* dyn_dbe = dyn->add_subcommand("dbe", "dynamical braid equation");
    CLI::App* dyn_irf = dyn->add_subcommand("irf", "vertex-IRF change-of-basis identity");
    for (CLI::App* sub : {dyn_dbe, dyn_irf}) {
        add_param_options(sub, mf);
        sub->add_flag("--json", mf.json_report, "machine-readable report");
    }

    try {
        app.parse(argc, argv);
        mf.validate();
        if (build->parsed()) {
            mf.command = "build";
            return run_build(mf);
        }
        mf.command = "check";
        if (dyn->parsed()) mf.check = dyn_dbe->parsed() ? "dbe" : "irf";
        return run_check(mf);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
