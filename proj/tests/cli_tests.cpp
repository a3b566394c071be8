// End-to-end checks of the command line tool. argv[1] is the binary path;
// every case shells out, captures stdout+stderr, and checks the exit code.
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

int failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string g_cli;

RunResult run(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "cannot spawn: " << cmd << "\n";
        std::exit(1);
    }
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

void check_exit(const std::string& args, int expect) {
    RunResult r = run(args);
    check(r.exit_code == expect, args + " -> exit " + std::to_string(r.exit_code) +
                                     ", expected " + std::to_string(expect) + "\n" + r.output);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

size_t line_count(const std::string& s) {
    size_t n = 0;
    for (char c : s) n += (c == '\n');
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-cli>\n";
        return 1;
    }
    g_cli = argv[1];

    // construct: parameter summary as JSON
    {
        RunResult r = run("construct --p 3 --m 2 --N 1");
        check(r.exit_code == 0, "construct exits 0:\n" + r.output);
        json j = json::parse(r.output, nullptr, false);
        check(!j.is_discarded(), "construct emits valid JSON");
        check(j["p"] == 3 && j["m"] == 2 && j["q"] == 9, "construct field parameters");
        check(j["N1"] == 4 && j["N2"] == 1 && j["n"] == 4, "construct derived parameters");
        check(j["L_size"] == 36 && j["codewords"] == 81, "construct sizes");
        check(j["modulus"] == json::array({2, 1, 1}), "construct canonical modulus");
    }

    // construct with an explicit modulus
    {
        RunResult r = run("construct --p 3 --m 2 --N 1 --modulus 2 1 1");
        check(r.exit_code == 0, "explicit canonical modulus accepted:\n" + r.output);
    }

    // invalid inputs exit 2
    check_exit("construct --p 4 --m 2 --N 1", 2);                      // not an odd prime
    check_exit("construct --p 3 --m 2 --N 5", 2);                      // N does not divide q-1
    check_exit("construct --p 3 --m 2 --N 1 --modulus 1 0 1", 2);      // irreducible, not primitive
    check_exit("construct --p 3 --m 2 --N 1 --modulus 1 1 1", 2);      // reducible
    check_exit("construct --p 3 --m 2 --N 1 --modulus 1 1", 2);        // wrong degree
    check_exit("construct --p 3 --m 2 --N 1 --modulus 2 1 2", 2);      // not monic
    check_exit("construct --p 3 --m 2 --N 1 --modulus 4 1 1", 2);      // digit out of range
    check_exit("construct --p 3 --m 2", 2);                            // --N is required
    check_exit("construct --p 3 --m 2 --N 1 --format yaml", 2);        // unknown format
    check_exit("construct --p 3 --m 2 --N 1 --bogus", 2);              // unknown flag
    check_exit("analyze --p 3 --m 2 --N 1 --wmax-dual 5", 2);          // out of range
    check_exit("", 2);                                                 // a subcommand is required
    check_exit("--help", 0);

    // analyze: full report
    {
        RunResult r = run("analyze --p 3 --m 2 --N 1");
        check(r.exit_code == 0, "analyze exits 0:\n" + r.output);
        json j = json::parse(r.output, nullptr, false);
        check(!j.is_discarded(), "analyze emits valid JSON");
        check(j["summary"]["confirmed"] == 4, "analyze confirmed count");
        check(j["summary"]["refuted"] == 0, "analyze refuted count");
        check(j["dual"]["distance"] == 2, "analyze dual distance");
        check(j["gray_code"]["dimension"] == 4, "analyze gray dimension");
        check(j["secret_sharing"]["classification"] == "dictatorial", "analyze classification");
        check(j["theorems"].size() == 8, "analyze runs all checks by default");
    }

    // analyze output is byte-identical across runs
    {
        RunResult a = run("analyze --p 5 --m 2 --N 3");
        RunResult b = run("analyze --p 5 --m 2 --N 3");
        check(a.exit_code == 0 && b.exit_code == 0, "repeat analyze exits 0");
        check(a.output == b.output, "analyze output is deterministic");
    }

    // theorem selection
    {
        RunResult r = run("analyze --p 3 --m 2 --N 1 --theorems 4.4");
        json j = json::parse(r.output, nullptr, false);
        check(r.exit_code == 0 && j["theorems"].size() == 1, "single check selected");
        RunResult r2 = run("analyze --p 3 --m 2 --N 1 --theorems 4.4,4.7");
        json j2 = json::parse(r2.output, nullptr, false);
        check(r2.exit_code == 0 && j2["theorems"].size() == 2, "comma list of checks");
        check(j2["theorems"][0]["verdict"] == "confirmed" &&
                  j2["theorems"][1]["verdict"] == "confirmed",
              "selected checks confirm");
    }
    check_exit("analyze --p 3 --m 2 --N 1 --theorems 9.9", 2);

    // budget refusals exit 4
    check_exit("analyze --p 3 --m 6 --N 4 --budget 1000", 4);
    check_exit("analyze --p 7 --m 2 --N 3 --wmax-dual 3", 4);

    // the non-injective instance reports its anomaly and still exits 0
    {
        RunResult r = run("analyze --p 3 --m 2 --N 4");
        check(r.exit_code == 0, "anomalous instance exits 0:\n" + r.output);
        json j = json::parse(r.output, nullptr, false);
        check(j["image"]["anomaly"] == true, "image anomaly flagged");
        check(!j["image"].contains("m_prime"), "no subfield exponent for the anomaly");
        check(j["image"]["size"] == 27, "collapsed image size");
    }

    // text format smoke
    {
        RunResult r = run("analyze --p 3 --m 2 --N 1 --format text");
        check(r.exit_code == 0, "text analyze exits 0");
        check(r.output.find("Gray code [72, 4, 48] over F_3") != std::string::npos,
              "text report names the Gray parameters");
        check(r.output.find("4.4: confirmed") != std::string::npos, "text report lists checks");
    }

    // file output and csv format
    {
        std::string path = "cli_spec_out.csv";
        RunResult r = run("construct --p 3 --m 2 --N 1 --format csv --out " + path);
        check(r.exit_code == 0 && r.output.empty(), "csv --out writes nothing to stdout");
        std::string body = slurp(path);
        check(body.find("key,value\n") == 0, "csv body starts with the header");
        check(body.find("L_size,36\n") != std::string::npos, "csv body has the sizes");
        std::remove(path.c_str());
    }

    // matrix side outputs
    {
        RunResult r = run("construct --p 3 --m 2 --N 1 --matrix-out cli_m.csv --gray-out cli_g.csv");
        check(r.exit_code == 0, "matrix outputs exit 0:\n" + r.output);
        std::string m = slurp("cli_m.csv"), g = slurp("cli_g.csv");
        check(line_count(m) == 81, "codeword matrix has one row per codeword");
        check(line_count(g) == 81, "gray matrix has one row per codeword");
        check(m.substr(0, 5) == "0+0u,", "codeword matrix uses ring tokens");
        std::remove("cli_m.csv");
        std::remove("cli_g.csv");
    }

    // sweep over one field
    {
        RunResult r = run("sweep --p 3 --m 2");
        check(r.exit_code == 0, "sweep exits 0:\n" + r.output);
        json j = json::parse(r.output, nullptr, false);
        check(!j.is_discarded(), "sweep emits valid JSON");
        check(j["rows"].size() == 4, "one row per divisor of q-1");
        for (const auto& row : j["rows"]) {
            check(row["error"] == "", "sweep rows run clean");
            check(row["refuted"] == 0, "sweep rows have no refuted checks");
        }
    }

    // sweep carries per-row failures without aborting
    {
        RunResult r = run("sweep --p 3 --p 4 --m 2 --format csv");
        check(r.exit_code == 0, "mixed sweep exits 0:\n" + r.output);
        check(r.output.find("odd prime") != std::string::npos, "error column names the problem");
        check(line_count(r.output) == 6, "header, four clean rows, one error row");
    }

    if (failures) {
        std::cerr << failures << " cli check(s) failed\n";
        return 1;
    }
    std::cout << "all cli checks passed\n";
    return 0;
}
