#pragma once

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvop/io.hpp"

namespace mvop {

// Exit codes: 0 success, 1 verification/construction failure, 2 usage error.

namespace cli_detail {

struct FamilyOpts {
    int n = 0;
    int p = 0;
    int ell = 0;
    long d = -1;
    std::string sign = "+";
    bool top = false;
    bool scalar = false;
};

inline void add_family_options(CLI::App* cmd, FamilyOpts& o) {
    cmd->add_option("--n", o.n, "sphere parameter n of the pair (SO(n+1), SO(n))");
    cmd->add_option("--p", o.p, "exterior power index (size-2 families)");
    cmd->add_flag("--top", o.top, "size-3 family for n = 2*ell + 1");
    cmd->add_flag("--scalar", o.scalar, "scalar family for n = 2*ell");
    cmd->add_option("--ell", o.ell, "ell for --top / --scalar");
    cmd->add_option("--d", o.d, "type parameter d (scalar families)");
    cmd->add_option("--sign", o.sign, "+ or - (scalar families)")->check(CLI::IsMember({"+", "-"}));
}

inline SphericalFamily family_from_opts(const FamilyOpts& o) {
    if (o.top) {
        if (o.scalar || o.n || o.p) throw DomainError("choose one of --n/--p, --top, --scalar");
        if (o.ell <= 0) throw DomainError("--top needs --ell");
        return build_family_top(o.ell);
    }
    if (o.scalar) {
        if (o.n || o.p) throw DomainError("choose one of --n/--p, --top, --scalar");
        if (o.ell <= 0 || o.d < 0) throw DomainError("--scalar needs --ell and --d");
        return build_scalar_family(o.ell, o.d, o.sign == "-" ? -1 : 1);
    }
    if (o.n <= 0 || o.p <= 0) throw DomainError("need --n and --p (or --top / --scalar)");
    return build_family(o.n, o.p);
}

struct GlobalOpts {
    std::string mode = "exact";
    double tol = 1e-9;
    std::string format;
    std::uint64_t seed = 20140707;
};

inline void add_global_options(CLI::App* cmd, GlobalOpts& g) {
    cmd->add_option("--mode", g.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--tol", g.tol, "tolerance for float-mode checks");
    cmd->add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", g.seed, "seed for randomized checks");
}

// MVOP_MODE overrides --mode when set.
inline int apply_mode_env(GlobalOpts& g, std::ostream& err) {
    const char* env = std::getenv("MVOP_MODE");
    if (!env) return 0;
    std::string v(env);
    if (v != "exact" && v != "float") {
        err << "MVOP_MODE must be 'exact' or 'float'\n";
        return 2;
    }
    g.mode = v;
    return 0;
}

inline HighestWeight weight_from_list(int n, const std::vector<long>& entries) {
    return HighestWeight::for_so(n, entries);
}

}  // namespace cli_detail

/// Full command dispatch; returns the process exit code. stdout carries
/// data, stderr carries diagnostics.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using cli_detail::FamilyOpts;
    using cli_detail::GlobalOpts;

    CLI::App app{"matrix-valued orthogonal polynomial families on the sphere"};
    app.require_subcommand(1);

    FamilyOpts fam_params, fam_gen, fam_seq, fam_verify, fam_eval;
    GlobalOpts glob;

    CLI::App* cmd_params = app.add_subcommand("params", "family data: C, U, V, E, N, dims, weight");
    cli_detail::add_family_options(cmd_params, fam_params);

    CLI::App* cmd_gen = app.add_subcommand("gen", "one eigenfunction P_{w,delta}");
    cli_detail::add_family_options(cmd_gen, fam_gen);
    long gen_w = 0;
    int gen_delta = 0;
    cmd_gen->add_option("--w", gen_w, "degree w")->required();
    cmd_gen->add_option("--delta", gen_delta, "delta in {-1,0,1}");

    CLI::App* cmd_seq = app.add_subcommand("seq", "all eigenfunctions with w <= wmax");
    cli_detail::add_family_options(cmd_seq, fam_seq);
    long seq_wmax = 0;
    cmd_seq->add_option("--wmax", seq_wmax, "largest degree")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the certification suite");
    cli_detail::add_family_options(cmd_verify, fam_verify);
    long verify_wmax = 6;
    cmd_verify->add_option("--wmax", verify_wmax, "largest degree");

    CLI::App* cmd_eval = app.add_subcommand("eval", "sample H = Psi P on a grid (CSV)");
    cli_detail::add_family_options(cmd_eval, fam_eval);
    long eval_w = 0;
    int eval_delta = 0;
    std::vector<double> eval_s, eval_y;
    cmd_eval->add_option("--w", eval_w, "degree w");
    cmd_eval->add_option("--delta", eval_delta, "delta in {-1,0,1}");
    cmd_eval->add_option("--s", eval_s, "arc parameter grid, strictly inside (0, pi)")->delimiter(',');
    cmd_eval->add_option("--y", eval_y, "y grid, strictly inside (0, 1)")->delimiter(',');

    CLI::App* cmd_casimir = app.add_subcommand("casimir", "Casimir eigenvalue of an SO(n) weight");
    int cas_n = 0;
    std::vector<long> cas_weight;
    cmd_casimir->add_option("--n", cas_n, "group SO(n)")->required();
    cmd_casimir->add_option("--weight", cas_weight, "m1,m2,...")->required()->delimiter(',');

    CLI::App* cmd_branch = app.add_subcommand("branch", "SO(n-1) weights under an SO(n) weight");
    int br_n = 0;
    std::vector<long> br_weight;
    cmd_branch->add_option("--n", br_n, "group SO(n)")->required();
    cmd_branch->add_option("--weight", br_weight, "m1,m2,...")->required()->delimiter(',');

    CLI::App* cmd_scalar = app.add_subcommand("scalar", "scalar radial eigenfunction h_w");
    int sc_ell = 0;
    long sc_d = 0, sc_w = 0;
    std::string sc_sign = "+";
    cmd_scalar->add_option("--ell", sc_ell, "n = 2*ell")->required();
    cmd_scalar->add_option("--d", sc_d, "type parameter d")->required();
    cmd_scalar->add_option("--w", sc_w, "degree w >= d")->required();
    cmd_scalar->add_option("--sign", sc_sign, "+ or -")->check(CLI::IsMember({"+", "-"}));

    for (CLI::App* c : {cmd_params, cmd_gen, cmd_seq, cmd_verify, cmd_eval, cmd_casimir,
                        cmd_branch, cmd_scalar})
        cli_detail::add_global_options(c, glob);

    std::vector<const char*> argv;
    argv.push_back("mvop");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    if (int rc = cli_detail::apply_mode_env(glob, err)) return rc;

    try {
        if (*cmd_params) {
            out << family_to_json(cli_detail::family_from_opts(fam_params)).dump(2) << "\n";
            return 0;
        }
        if (*cmd_gen) {
            SphericalFamily f = cli_detail::family_from_opts(fam_gen);
            SolvedPolynomial sol = construct_P(f, EigKey{gen_w, gen_delta});
            json j = solved_to_json(sol);
            j["family"] = family_to_json(f);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (*cmd_seq) {
            SphericalFamily f = cli_detail::family_from_opts(fam_seq);
            if (seq_wmax < 0) throw DomainError("seq: wmax must be nonnegative");
            json polys = json::array();
            long w_lo = (f.kind == FamilyKind::Scalar) ? f.d : 0;
            for (long w = w_lo; w <= seq_wmax; ++w)
                for (int delta : admissible_deltas(f))
                    polys.push_back(solved_to_json(construct_P(f, EigKey{w, delta})));
            out << json{{"family", family_to_json(f)}, {"polynomials", std::move(polys)}}.dump(2)
                << "\n";
            return 0;
        }
        if (*cmd_verify) {
            SphericalFamily f = cli_detail::family_from_opts(fam_verify);
            Mode mode = glob.mode == "float" ? Mode::Float : Mode::Exact;
            VerifyReport rep = run_suite(f, verify_wmax, glob.tol, mode, glob.seed);
            out << report_to_json(rep).dump(2) << "\n";
            return rep.pass() ? 0 : 1;
        }
        if (*cmd_eval) {
            SphericalFamily f = cli_detail::family_from_opts(fam_eval);
            if (eval_s.empty() == eval_y.empty())
                throw DomainError("eval: give exactly one of --s / --y");
            for (double s : eval_s)
                if (!(s > 0 && s < M_PI)) throw DomainError("eval: s outside (0, pi)");
            for (double y : eval_y)
                if (!(y > 0 && y < 1)) throw DomainError("eval: y outside (0, 1)");
            SolvedPolynomial sol = construct_P(f, EigKey{eval_w, eval_delta});
            const bool use_s = !eval_s.empty();
            const std::vector<double>& grid = use_s ? eval_s : eval_y;
            json jrows = json::array();
            std::string header = use_s ? "s" : "y";
            for (int i = 1; i <= f.size; ++i) header += ",h" + std::to_string(i);
            if (glob.format != "json") out << header << "\n";
            for (double g : grid) {
                CVector H = use_s ? restrict_arc(f, sol, g) : eval_H(f, sol, g);
                if (glob.format == "json") {
                    json row;
                    row[use_s ? "s" : "y"] = g;
                    json hv = json::array();
                    for (const auto& z : H) hv.push_back(csv_cell(z));
                    row["H"] = std::move(hv);
                    jrows.push_back(std::move(row));
                } else {
                    out << csv_number(g);
                    for (const auto& z : H) out << "," << csv_cell(z);
                    out << "\n";
                }
            }
            if (glob.format == "json") out << jrows.dump(2) << "\n";
            return 0;
        }
        if (*cmd_casimir) {
            HighestWeight w = cli_detail::weight_from_list(cas_n, cas_weight);
            json j = to_json(w);
            j["n"] = cas_n;
            j["value"] = casimir(w).str();
            out << j.dump(2) << "\n";
            return 0;
        }
        if (*cmd_branch) {
            HighestWeight w = cli_detail::weight_from_list(br_n, br_weight);
            json arr = json::array();
            for (const auto& b : branch(br_n, w)) arr.push_back(to_json(b));
            out << json{{"n", br_n}, {"weight", to_json(w)}, {"branches", std::move(arr)}}.dump(2)
                << "\n";
            return 0;
        }
        if (*cmd_scalar) {
            SphericalFamily f = build_scalar_family(sc_ell, sc_d, sc_sign == "-" ? -1 : 1);
            SolvedPolynomial sol = construct_P(f, EigKey{sc_w, 0});
            json j;
            j["ell"] = sc_ell;
            j["d"] = sc_d;
            j["sign"] = sc_sign;
            j["w"] = sc_w;
            j["lambda"] = sol.lambda.str();
            json coeffs = json::array();
            for (const auto& c : scalar_coeffs(sol.P)) coeffs.push_back(c.str());
            j["coeffs"] = std::move(coeffs);
            out << j.dump(2) << "\n";
            return 0;
        }
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace mvop
