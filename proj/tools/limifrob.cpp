#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "limifrob/cli/report.hpp"

using namespace limifrob;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidFamily("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

int exit_code(ErrorCategory c) { return static_cast<int>(c); }

int compute(const std::string& family_path, const std::string& out_path, int threads, bool verbose, bool timings) {
    FamilyInput in = parse_family(slurp(family_path));
    if (const char* cap = std::getenv("LIMIFROB_ESCALATION_CAP")) in.escalation_cap = std::atoi(cap);
    RunOptions opt;
    opt.threads = threads;
    if (verbose) opt.log = [](const std::string& s) { std::cerr << "[limifrob] " << s << "\n"; };
    Report rep = run(in, opt);
    std::cout << render_text(rep);
    const std::string doc = report_to_json(rep, timings).dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw InvalidFamily("cannot write " + out_path);
        f << doc;
    }
    bool ok = rep.weil.all_weights_pass && rep.weil.product_matches && rep.structure.nilpotent && rep.structure.commutes;
    for (const auto& s : rep.smooth_fibers) ok = ok && (!s.recognized || s.kmax == 0 || s.pass);
    return ok ? 0 : exit_code(ErrorCategory::Verification);
}

int verify(const std::string& report_path, int kmax, int threads) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(slurp(report_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, static_cast<int>(e.byte), "report is not valid JSON");
    }
    bool ok = true;
    for (const auto& item : verify_report(j, kmax, threads)) {
        std::cout << (item.pass ? "PASS " : "FAIL ") << item.name;
        if (!item.detail.empty()) std::cout << " (" << item.detail << ")";
        std::cout << "\n";
        ok = ok && item.pass;
    }
    return ok ? 0 : exit_code(ErrorCategory::Verification);
}

int basis(int n, int d) {
    const auto names = default_variable_names(n + 2);
    const auto b = dwork_basis(n, d);
    std::cout << b.size() << " elements\n";
    for (const auto& e : b) {
        std::string mono;
        for (std::size_t i = 0; i < e.w.size(); ++i) {
            if (e.w[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e.w[i] > 1) mono += "^" + std::to_string(e.w[i]);
        }
        std::cout << "  " << (mono.empty() ? "1" : mono) << " Omega / P^" << e.k << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Limiting Frobenius structures of degenerating pencils of hypersurfaces"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "Cap on worker threads")->check(CLI::Range(1, 256));

    auto* c = app.add_subcommand("compute", "Run the pipeline on a family file");
    std::string family_path, out_path;
    bool verbose = false, timings = false;
    c->add_option("--family", family_path, "Family description")->required();
    c->add_option("--out", out_path, "Write the JSON report here");
    c->add_flag("--verbose", verbose, "Progress on stderr");
    c->add_flag("--timings", timings, "Include stage timings in the JSON report");

    auto* v = app.add_subcommand("verify", "Re-check a JSON report");
    std::string report_path;
    int kmax = 3;
    v->add_option("--report", report_path, "Report produced by compute --out")->required();
    v->add_option("--kmax", kmax, "Largest extension degree for point counts")->check(CLI::Range(1, 12));

    auto* b = app.add_subcommand("basis", "Print the Dwork basis");
    int bn = 1, bd = 4;
    b->add_option("--n", bn, "Fibre dimension")->required()->check(CLI::Range(1, 8));
    b->add_option("--d", bd, "Degree")->required()->check(CLI::Range(2, 64));

    CLI11_PARSE(app, argc, argv);
    try {
        if (c->parsed()) return compute(family_path, out_path, threads, verbose, timings);
        if (v->parsed()) return verify(report_path, kmax, threads);
        if (b->parsed()) return basis(bn, bd);
    } catch (const StageError& e) {
        std::cerr << "limifrob: stage " << e.what() << "\n";
        return exit_code(e.category());
    } catch (const Error& e) {
        std::cerr << "limifrob: " << e.what() << "\n";
        return exit_code(e.category());
    } catch (const std::exception& e) {
        std::cerr << "limifrob: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
