#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "tracecodes/report.hpp"

using namespace tracecodes;

namespace {

// exit codes: 0 ok, 1 internal, 2 invalid input, 3 a check was refuted,
// 4 budget exceeded

struct CommonOpts {
    uint64_t p = 0, m = 1;
    std::vector<uint64_t> modulus;
    uint64_t budget = kDefaultBudget;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--p", c.p, "odd prime p")->required();
    cmd->add_option("--m", c.m, "extension degree m")->required();
    cmd->add_option("--modulus", c.modulus,
                    "monic modulus of degree m, coefficients low degree first including the "
                    "leading 1 (default: canonical search)");
    cmd->add_option("--budget", c.budget, "cap on codeword evaluations");
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", c.out, "output file (default stdout)");
}

std::shared_ptr<const FiniteField> make_field(const CommonOpts& c) {
    if (c.modulus.empty()) return FiniteField::make(c.p, c.m);
    return FiniteField::make(c.p, c.m, c.modulus);
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file " + path);
    f << payload;
}

// returns the violated precondition, or empty when the shape is fine
std::string modulus_problem(const CommonOpts& c) {
    if (c.modulus.empty()) return "";
    if (c.modulus.size() != c.m + 1) return "--modulus needs m+1 coefficients, low degree first";
    if (c.modulus.back() != 1) return "--modulus must be monic with leading coefficient 1";
    for (uint64_t d : c.modulus)
        if (d >= c.p) return "--modulus coefficients must lie in [0, p)";
    return "";
}

std::vector<uint64_t> divisors_of(uint64_t v) {
    std::vector<uint64_t> out;
    for (uint64_t d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d != v / d) out.push_back(v / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace codes over F_p + uF_p: construction, exact weight enumeration, and "
                 "verification of the closed-form distributions"};
    app.require_subcommand(1);

    CommonOpts cc;
    uint64_t cN = 1;
    std::string matrix_out, gray_out;
    CLI::App* construct = app.add_subcommand(
        "construct", "derive the defining set and print the parameter summary");
    add_common(construct, cc);
    construct->add_option("--N", cN, "divisor of p^m - 1")->required();
    construct->add_option("--matrix-out", matrix_out, "write the full codeword matrix (CSV)");
    construct->add_option("--gray-out", gray_out, "write the Gray image matrix (CSV)");

    CommonOpts ac;
    uint64_t aN = 1;
    uint32_t wmax = 2;
    uint64_t massey_cap = 10000;
    std::vector<std::string> theorems;
    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze", "enumerate weights, run the structural checks, verify the named claims");
    add_common(analyze_cmd, ac);
    analyze_cmd->add_option("--N", aN, "divisor of p^m - 1")->required();
    analyze_cmd->add_option("--wmax-dual", wmax, "dual-distance search support cap (1..3)")
        ->check(CLI::Range(1u, 3u));
    analyze_cmd->add_option("--massey-cap", massey_cap, "max minimal access sets reported");
    analyze_cmd
        ->add_option("--theorems", theorems,
                     "comma list of checks (default all): 2.2,4.4,4.5,4.7,4.9,4.10,5.2,5.3")
        ->delimiter(',');

    std::vector<uint64_t> sp, sm, sN;
    uint64_t sbudget = kDefaultBudget;
    std::string sformat = "json", sout;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "run analyze over a parameter grid, one row per (p, m, N)");
    sweep->add_option("--p", sp, "odd primes")->required();
    sweep->add_option("--m", sm, "extension degrees")->required();
    sweep->add_option("--N", sN, "divisors of p^m - 1 (default: all)");
    sweep->add_option("--budget", sbudget, "cap on codeword evaluations per row");
    sweep->add_option("--format", sformat, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sweep->add_option("--out", sout, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed()) {
            if (std::string bad = modulus_problem(cc); !bad.empty()) {
                std::cerr << "error: " << bad << "\n";
                return 2;
            }
            auto spec = derive_spec(make_field(cc), cN);
            std::string payload = cc.format == "json"  ? spec_json(spec)
                                  : cc.format == "csv" ? spec_csv(spec)
                                                       : spec_text(spec);
            write_output(cc.out, payload);
            if (!matrix_out.empty() || !gray_out.empty()) {
                RingCode code = build_code(spec, cc.budget);
                if (!matrix_out.empty()) write_output(matrix_out, codeword_matrix_csv(spec, code));
                if (!gray_out.empty()) write_output(gray_out, gray_matrix_csv(spec, code));
            }
            return 0;
        }

        if (analyze_cmd->parsed()) {
            if (std::string bad = modulus_problem(ac); !bad.empty()) {
                std::cerr << "error: " << bad << "\n";
                return 2;
            }
            for (const std::string& id : theorems)
                if (std::find(known_theorems().begin(), known_theorems().end(), id) ==
                    known_theorems().end())
                    throw UnknownTheorem("unknown theorem id: " + id);
            auto spec = derive_spec(make_field(ac), aN);
            AnalyzeOptions opt;
            opt.budget = ac.budget;
            opt.wmax_dual = wmax;
            opt.theorems = theorems;
            opt.massey_cap = massey_cap;
            AnalyzeReport rep = analyze(spec, opt);
            std::string payload = ac.format == "json"  ? report_json(rep)
                                  : ac.format == "csv" ? report_csv(rep)
                                                       : report_text(rep);
            write_output(ac.out, payload);
            return rep.refuted > 0 ? 3 : 0;
        }

        // sweep: per-row failures land in the error column, the run never aborts
        std::vector<SweepRow> rows;
        AnalyzeOptions opt;
        opt.budget = sbudget;
        for (uint64_t p : sp)
            for (uint64_t m : sm) {
                std::vector<uint64_t> Ns = sN;
                if (Ns.empty()) {
                    try {
                        auto field = FiniteField::make(p, m);
                        Ns = divisors_of(field->q() - 1);
                    } catch (const std::exception& e) {
                        SweepRow row;
                        row.p = p;
                        row.m = m;
                        row.error = e.what();
                        rows.push_back(row);
                        continue;
                    }
                }
                for (uint64_t N : Ns) rows.push_back(sweep_row(p, m, N, opt));
            }
        std::string payload = sformat == "json"  ? sweep_json(rows)
                              : sformat == "csv" ? sweep_csv(rows)
                                                 : sweep_text(rows);
        write_output(sout, payload);
        for (const SweepRow& r : rows)
            if (r.refuted > 0) return 3;
        return 0;
    } catch (const NotOddPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotIrreducible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotPrimitive& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadDivisor& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownTheorem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
