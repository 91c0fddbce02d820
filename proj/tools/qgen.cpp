// qgen: exact q-Genocchi tables, q-Gamma/q-zeta evaluation and the identity
// verification suite. Exact-arithmetic commands produce byte-identical output
// across runs; rational flags use the canonical "p/r" form, real flags use
// decimal strings.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgen/genocchi.hpp"
#include "qgen/qgamma.hpp"
#include "qgen/qzeta.hpp"
#include "qgen/table_io.hpp"
#include "qgen/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr unsigned kDefaultPrecisionBits = 128;

unsigned env_precision_bits() {
    if (const char* env = std::getenv("QGEN_PRECISION_BITS")) {
        try {
            const long v = std::stol(env);
            if (v >= 64) return static_cast<unsigned>(v);
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid QGEN_PRECISION_BITS='" << env << "'\n";
    }
    return kDefaultPrecisionBits;
}

int emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return 2;
    }
    os << payload;
    return 0;
}

int emit_error(const qgen::Error& e) {
    ordered_json j;
    j["error"] = e.code();
    j["message"] = e.what();
    std::cout << j.dump(2) << "\n";
    return 3;
}

std::string real_json_str(const qgen::Real& v) {
    return v.str();
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

struct GenocchiArgs {
    unsigned alpha = 1;
    unsigned order = 8;
    std::string q;
    std::string format = "json";
    std::string x;
    std::string out;
};

int run_genocchi(const GenocchiArgs& args) {
    try {
        qgen::QContext ctx(qgen::rational_from_string(args.q));
        std::optional<qgen::Rational> eval_at;
        if (!args.x.empty()) eval_at = qgen::rational_from_string(args.x);
        const qgen::GenocchiTable table = qgen::genocchi_table(ctx, args.alpha, args.order);
        if (args.format == "csv") {
            return emit(qgen::table_to_csv(table, eval_at), args.out);
        }
        std::string payload = qgen::table_to_json(table);
        if (eval_at) {
            ordered_json j = ordered_json::parse(payload);
            j["x"] = qgen::to_string(*eval_at);
            ordered_json values = ordered_json::array();
            for (unsigned n = 0; n <= table.order; ++n) {
                values.push_back(qgen::to_string(qgen::poly_eval(table.poly(n), *eval_at)));
            }
            j["values"] = std::move(values);
            payload = j.dump(2) + "\n";
        }
        return emit(payload, args.out);
    } catch (const qgen::Error& e) {
        return emit_error(e);
    }
}

struct GammaArgs {
    std::string q;
    std::string x;
    std::string method = "product";
    unsigned prec = 0;
    std::string tol = "1e-10";
    bool improper = false;
    long residue = -1;
    std::string out;
};

int run_gamma(const GammaArgs& args) {
    const unsigned bits = args.prec ? args.prec : env_precision_bits();
    try {
        qgen::set_working_precision_bits(bits);  // flags parse at full precision
        if (args.residue >= 0) {
            // Exact residue at -j, reported in both conventions.
            const qgen::Rational q = qgen::rational_from_string(args.q);
            qgen::QContext ctx(q);
            if (ctx.is_classical()) {
                throw qgen::DomainError("residues require 0 < q < 1");
            }
            const qgen::Rational lemma =
                qgen::qgamma_residue(ctx, static_cast<unsigned long>(args.residue));
            qgen::FloatContext fctx(q, bits, qgen::Real(args.tol.c_str()));
            ordered_json j;
            j["q"] = qgen::to_string(q);
            j["j"] = args.residue;
            j["residue"] = qgen::to_string(lemma);
            j["residue_classical"] =
                real_json_str(qgen::to_real(lemma) * qgen::residue_convention_factor(fctx));
            j["convention"] = "residue is the coefficient of 1/[z+j]_q; residue_classical the "
                              "coefficient of 1/(z+j)";
            return emit(j.dump(2) + "\n", args.out);
        }

        qgen::FloatContext fctx(qgen::Real(args.q.c_str()), bits, qgen::Real(args.tol.c_str()));
        const qgen::Real x(args.x.c_str());
        qgen::Eval eval;
        if (args.method == "product") {
            eval = qgen::qgamma_product_ex(fctx, x);
        } else if (args.method == "integral") {
            eval = qgen::qgamma_integral_ex(fctx, x, args.improper);
        } else if (args.method == "meromorphic") {
            eval = qgen::qgamma_meromorphic_ex(fctx, x);
        } else {
            std::cerr << "error: unknown method '" << args.method << "'\n";
            return 2;
        }
        ordered_json j;
        j["method"] = args.method;
        j["q"] = args.q;
        j["x"] = args.x;
        j["value"] = real_json_str(eval.value);
        j["precision_bits"] = bits;
        j["tol"] = args.tol;
        j["terms"] = eval.tail.terms;
        j["tail_bound"] = real_json_str(eval.tail.tail_bound);
        j["warnings"] = eval.tail.warnings;
        return emit(j.dump(2) + "\n", args.out);
    } catch (const qgen::Error& e) {
        return emit_error(e);
    }
}

struct ZetaArgs {
    std::string q;
    unsigned alpha = 1;
    long neg_n = -1;
    std::string x;
    std::string z;
    unsigned prec = 0;
    std::string tol = "1e-10";
    std::string out;
};

int run_zeta(const ZetaArgs& args, bool has_neg_n, bool has_z) {
    if (has_neg_n == has_z) {
        std::cerr << "error: pass exactly one of --neg-n (exact mode) or --z (numeric mode)\n";
        return 2;
    }
    try {
        if (has_neg_n) {
            qgen::QContext ctx(qgen::rational_from_string(args.q));
            const qgen::Rational x = qgen::rational_from_string(args.x.empty() ? "0" : args.x);
            const qgen::ZetaReport rep = qgen::interpolation_check(
                ctx, static_cast<unsigned>(args.neg_n), x, args.alpha);
            ordered_json j;
            j["q"] = qgen::to_string(rep.q);
            j["alpha"] = rep.alpha;
            j["n"] = rep.n;
            j["x"] = qgen::to_string(rep.x);
            j["lhs"] = qgen::to_string(rep.lhs);
            j["rhs"] = qgen::to_string(rep.rhs);
            j["equal"] = rep.equal;
            if (rep.ratio) {
                j["ratio"] = qgen::to_string(*rep.ratio);
            } else {
                j["ratio"] = nullptr;
            }
            return emit(j.dump(2) + "\n", args.out);
        }
        const unsigned bits = args.prec ? args.prec : env_precision_bits();
        qgen::set_working_precision_bits(bits);
        qgen::FloatContext fctx(qgen::Real(args.q.c_str()), bits, qgen::Real(args.tol.c_str()));
        const qgen::Eval eval = qgen::qzeta_numeric_ex(fctx, qgen::Real(args.z.c_str()),
                                                       qgen::Real(args.x.c_str()), args.alpha);
        ordered_json j;
        j["q"] = args.q;
        j["alpha"] = args.alpha;
        j["z"] = args.z;
        j["x"] = args.x;
        j["value"] = real_json_str(eval.value);
        j["precision_bits"] = bits;
        j["tol"] = args.tol;
        j["terms"] = eval.tail.terms;
        return emit(j.dump(2) + "\n", args.out);
    } catch (const qgen::Error& e) {
        return emit_error(e);
    }
}

struct VerifyArgs {
    std::string suites = "expansion,qderiv,qadd,convolution,rubin,gamma,zeta,limits";
    std::string q_list = "1/2,2/3,1";
    unsigned max_n = 10;
    std::string alpha_list = "1,2";
    std::string out;
};

int run_verify_cmd(const VerifyArgs& args) {
    qgen::VerifyConfig config;
    config.max_n = args.max_n;
    config.precision_bits = env_precision_bits();
    config.output_path = args.out;
    for (const auto& name : split_list(args.suites)) {
        const auto suite = qgen::suite_from_name(name);
        if (!suite) {
            std::cerr << "error: unknown suite '" << name << "'\n";
            return 2;
        }
        config.suites.push_back(*suite);
    }
    try {
        for (const auto& q : split_list(args.q_list)) {
            config.q_list.push_back(qgen::rational_from_string(q));
        }
        for (const auto& a : split_list(args.alpha_list)) {
            config.alpha_list.push_back(static_cast<unsigned>(std::stoul(a)));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: invalid verify configuration: " << e.what() << "\n";
        return 2;
    }

    qgen::VerifyReport report;
    try {
        report = qgen::run_verify(config);
    } catch (const qgen::DomainError& e) {
        std::cerr << "error: invalid verify configuration: " << e.what() << "\n";
        return 2;
    } catch (const qgen::Error& e) {
        std::cerr << "error: verification aborted: " << e.what() << "\n";
        return 1;
    }
    const int rc = emit(qgen::report_to_json(report), args.out);
    if (rc != 0) return rc;
    std::cerr << "verify: " << report.passed << " passed, " << report.failed << " failed, "
              << report.reported << " reported\n";
    return report.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-Genocchi toolkit: exact tables, q-Gamma/q-zeta evaluation, verification"};
    app.require_subcommand(1);

    GenocchiArgs gen_args;
    CLI::App* gen = app.add_subcommand("genocchi", "Construct a higher-order q-Genocchi table");
    gen->add_option("--alpha", gen_args.alpha, "Order alpha (>= 1)")->required();
    gen->add_option("--order", gen_args.order, "Truncation order N (>= alpha)")->required();
    gen->add_option("--q", gen_args.q, "Rational q in (0,1], e.g. 1/2")->required();
    gen->add_option("--format", gen_args.format, "Output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    gen->add_option("--x", gen_args.x, "Optional rational evaluation point");
    gen->add_option("--out", gen_args.out, "Write output to file instead of stdout");

    GammaArgs gamma_args;
    CLI::App* gamma = app.add_subcommand("gamma", "Evaluate Gamma_q or its residues");
    gamma->add_option("--q", gamma_args.q, "Real q in (0,1), decimal")->required();
    gamma->add_option("--x", gamma_args.x, "Evaluation point (real, decimal)");
    gamma->add_option("--method", gamma_args.method, "product|integral|meromorphic");
    gamma->add_option("--prec", gamma_args.prec, "Working precision in bits (>= 64)");
    gamma->add_option("--tol", gamma_args.tol, "Target relative error");
    gamma->add_flag("--improper", gamma_args.improper,
                    "Use the improper (bilateral) form of the q-integral");
    gamma->add_option("--residue", gamma_args.residue,
                      "Report the exact residue at -j in both conventions");
    gamma->add_option("--out", gamma_args.out, "Write output to file instead of stdout");

    ZetaArgs zeta_args;
    CLI::App* zeta = app.add_subcommand("zeta", "q-Hurwitz-zeta type function");
    zeta->add_option("--q", zeta_args.q, "q: rational p/r in exact mode, decimal in numeric mode")
        ->required();
    zeta->add_option("--alpha", zeta_args.alpha, "Order alpha (>= 1)");
    CLI::Option* neg_n = zeta->add_option("--neg-n", zeta_args.neg_n,
                                          "Exact mode: interpolation report at z = -n");
    CLI::Option* zopt = zeta->add_option("--z", zeta_args.z, "Numeric mode: z > 0 (decimal)");
    zeta->add_option("--x", zeta_args.x, "Shift x (rational in exact mode, decimal otherwise)");
    zeta->add_option("--prec", zeta_args.prec, "Working precision in bits (>= 64)");
    zeta->add_option("--tol", zeta_args.tol, "Target relative error (numeric mode)");
    zeta->add_option("--out", zeta_args.out, "Write output to file instead of stdout");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the identity verification suites");
    verify->add_option("--suites", verify_args.suites,
                       "Comma list: expansion,qderiv,qadd,convolution,rubin,gamma,zeta,limits");
    verify->add_option("--q", verify_args.q_list, "Comma list of rational q values");
    verify->add_option("--max-n", verify_args.max_n, "Largest index checked per suite");
    verify->add_option("--alpha", verify_args.alpha_list, "Comma list of orders alpha");
    verify->add_option("--out", verify_args.out, "Write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        if (gen_args.alpha < 1 || gen_args.order < gen_args.alpha) {
            std::cerr << "error: genocchi requires alpha >= 1 and order >= alpha\n"
                      << gen->help();
            return 2;
        }
        return run_genocchi(gen_args);
    }
    if (gamma->parsed()) {
        if (gamma_args.residue < 0 && gamma_args.x.empty()) {
            std::cerr << "error: gamma requires --x (or --residue)\n" << gamma->help();
            return 2;
        }
        return run_gamma(gamma_args);
    }
    if (zeta->parsed()) {
        if (!static_cast<bool>(*neg_n) && zeta_args.x.empty()) {
            std::cerr << "error: zeta numeric mode requires --x\n" << zeta->help();
            return 2;
        }
        return run_zeta(zeta_args, static_cast<bool>(*neg_n), static_cast<bool>(*zopt));
    }
    if (verify->parsed()) {
        return run_verify_cmd(verify_args);
    }
    return 2;
}
