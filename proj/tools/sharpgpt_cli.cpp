// Command-line front end; consumes the C API only.

#include <sharpgpt.h>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

int report_failure(sharp_status status) {
    std::cerr << "error: " << sharp_last_error() << "\n";
    return status == SHARP_ERR_NUMERIC ? kExitViolation : kExitInputError;
}

struct OwnedText {
    char* text = nullptr;
    ~OwnedText() { sharp_string_free(text); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jordan-algebraic state spaces: structural checks and multi-slit interference"};
    app.require_subcommand(1);

    std::string path;
    std::uint64_t seed = 0;
    double tol = 0.0;
    int order = -1;
    int trials = 50;
    int iters = 40;

    auto* verify = app.add_subcommand(
        "verify", "Run the structural check suite on a theory descriptor");
    verify->add_option("theory", path, "theory JSON file")->required();
    verify->add_option("--seed", seed, "sampling seed (default 0)");
    verify->add_option("--tol", tol, "override every check threshold");

    auto* interference = app.add_subcommand(
        "interference", "Print the subset value table and the orders of an experiment");
    interference->add_option("experiment", path, "experiment JSON file")->required();

    auto* scan = app.add_subcommand(
        "scan", "Search for the largest |I_n| a theory admits");
    scan->add_option("theory", path, "theory JSON file")->required();
    scan->add_option("--order", order, "interference order n")->required();
    scan->add_option("--trials", trials, "random restarts (default 50)");
    scan->add_option("--iters", iters, "ascent sweeps per restart (default 40)");
    scan->add_option("--seed", seed, "sampling seed (default 0)");

    auto* table = app.add_subcommand(
        "table", "Compute I_n from a raw subset value table");
    table->add_option("table", path, "table JSON file")->required();
    table->add_option("--order", order, "order to evaluate (default: the table's n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitInputError;
    }

    OwnedText out;
    if (verify->parsed()) {
        int pass = 0;
        const sharp_status status =
            sharp_run_verify(text.c_str(), seed, tol, &out.text, &pass);
        if (status != SHARP_OK) return report_failure(status);
        std::fputs(out.text, stdout);
        return pass ? kExitPass : kExitViolation;
    }
    if (interference->parsed()) {
        const sharp_status status = sharp_run_interference(text.c_str(), &out.text);
        if (status != SHARP_OK) return report_failure(status);
        std::fputs(out.text, stdout);
        return kExitPass;
    }
    if (scan->parsed()) {
        double best = 0.0;
        const sharp_status status =
            sharp_run_scan(text.c_str(), order, trials, iters, seed, &out.text, &best);
        if (status != SHARP_OK) return report_failure(status);
        std::fputs(out.text, stdout);
        return kExitPass;
    }
    const sharp_status status = sharp_run_table(text.c_str(), order, &out.text);
    if (status != SHARP_OK) return report_failure(status);
    std::fputs(out.text, stdout);
    return kExitPass;
}
