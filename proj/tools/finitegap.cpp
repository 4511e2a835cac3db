// Command-line front end: compute, verify and tabulate spectral curves.
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 internal assertion.

#include "finitegap/finitegap.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <thread>

namespace {

using namespace finitegap;

enum Exit { kOk = 0, kVerifyFailed = 1, kInvalidInput = 2, kInternal = 3 };

struct RunConfig {
    std::string op = "halphen";
    int g = 0;
    int g_max = 0;
    std::string format = "text";
    bool deep = false;
    std::string out;
    unsigned jobs = 0;
};

OperatorKind parse_operator(const std::string& s) { return s == "lame" ? OperatorKind::lame : OperatorKind::halphen; }

/// Genus validation before any computation.
void validate(OperatorKind op, int g) {
    if (op == OperatorKind::halphen) {
        classify(g);
    } else if (g < 1) {
        throw std::invalid_argument("invalid genus " + std::to_string(g) + ": the Lamé operator requires g >= 1");
    }
}

SpectralCurve compute_curve(OperatorKind op, int g) {
    return op == OperatorKind::halphen ? spectral_curve(g).curve : lame_curve(g);
}

std::string render(const SpectralCurve& c, const std::string& format) {
    if (format == "json") return curve_to_json(c).dump();
    if (format == "latex") return curve_to_latex(c);
    return curve_to_text(c);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
    f << text;
}

int run_curve(const RunConfig& cfg) {
    const OperatorKind op = parse_operator(cfg.op);
    validate(op, cfg.g);
    emit(render(compute_curve(op, cfg.g), cfg.format) + "\n", cfg.out);
    return kOk;
}

int run_verify(const RunConfig& cfg) {
    const OperatorKind op = parse_operator(cfg.op);
    validate(op, cfg.g);
    const VerificationReport rep =
        op == OperatorKind::halphen ? verify_halphen(spectral_curve(cfg.g), cfg.deep) : verify_lame(cfg.g);
    emit(cfg.format == "json" ? report_to_json(rep).dump() + "\n" : report_to_table(rep), cfg.out);
    return rep.passed() ? kOk : kVerifyFailed;
}

int run_table(const RunConfig& cfg) {
    const OperatorKind op = parse_operator(cfg.op);
    if (cfg.g_max < 1) throw std::invalid_argument("--g-max must be >= 1");
    std::vector<int> genera;
    for (int g = 1; g <= cfg.g_max; ++g)
        if (op == OperatorKind::lame || is_valid_genus(g)) genera.push_back(g);

    unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::string> rows(genera.size());
    std::vector<bool> ok(genera.size(), true);
    auto work = [&](std::size_t i) {
        try {
            rows[i] = curve_to_json(compute_curve(op, genera[i])).dump();
        } catch (const std::exception& e) {
            json err = json::object();
            err["operator"] = operator_name(op);
            err["g"] = genera[i];
            err["error"] = e.what();
            rows[i] = err.dump();
            ok[i] = false;
        }
    };
    // Each worker writes only its own slots; emission happens afterwards in g order.
    std::vector<std::future<void>> pending;
    for (std::size_t start = 0; start < jobs && start < genera.size(); ++start)
        pending.push_back(std::async(std::launch::async, [&, start] {
            for (std::size_t i = start; i < genera.size(); i += jobs) work(i);
        }));
    for (auto& p : pending) p.get();

    std::string text;
    for (const auto& r : rows) text += r + "\n";
    emit(text, cfg.out);
    return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; }) ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectral curves of the Halphen and Lamé operators"};
    app.require_subcommand(1);
    RunConfig cfg;
    const std::vector<std::string> operators{"halphen", "lame"};

    auto* curve = app.add_subcommand("curve", "Compute one spectral curve");
    curve->add_option("operator", cfg.op, "halphen or lame")->check(CLI::IsMember(operators));
    curve->add_option("--g", cfg.g, "genus")->required();
    curve->add_option("--format", cfg.format, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    curve->add_option("--out", cfg.out, "write to this file instead of stdout");

    auto* verify = app.add_subcommand("verify", "Run the verification suite for one genus");
    verify->add_option("--operator", cfg.op, "halphen or lame")->check(CLI::IsMember(operators));
    verify->add_option("--g", cfg.g, "genus")->required();
    verify->add_flag("--deep", cfg.deep, "also check the chi equation modulo the curve");
    verify->add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json", "text"}));
    verify->add_option("--out", cfg.out, "write to this file instead of stdout");

    auto* table = app.add_subcommand("table", "One JSON line per valid genus up to --g-max");
    table->add_option("--operator", cfg.op, "halphen or lame")->check(CLI::IsMember(operators));
    table->add_option("--g-max", cfg.g_max, "largest genus")->required();
    table->add_option("--jobs", cfg.jobs, "worker threads (default: hardware concurrency)");
    table->add_option("--out", cfg.out, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*curve) return run_curve(cfg);
        if (*verify) return run_verify(cfg);
        return run_table(cfg);
    } catch (const InvalidGenus& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
