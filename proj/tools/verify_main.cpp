#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pado/rational.hpp"
#include "pado/report.hpp"

namespace {

using pado::GridConfig;

/* "2,3,5" or "1..4" or a single value */
std::vector<long> parse_list(const std::string& text, const std::string& flag) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        std::size_t dots = piece.find("..");
        try {
            if (dots != std::string::npos) {
                long lo = std::stol(piece.substr(0, dots));
                long hi = std::stol(piece.substr(dots + 2));
                if (lo > hi) throw std::invalid_argument("empty range");
                for (long v = lo; v <= hi; ++v) out.push_back(v);
            } else {
                out.push_back(std::stol(piece));
            }
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "cannot parse '" + piece + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError(flag, "empty list");
    return out;
}

void validate_grid(const GridConfig& cfg) {
    for (long p : cfg.ps)
        if (!pado::is_prime(pado::Int(p)))
            throw CLI::ValidationError("--p", std::to_string(p) + " is not prime");
    for (long n : cfg.ns)
        if (n < 0 || n > pado::kLevelCap)
            throw CLI::ValidationError("--n", "levels must lie in 0.." +
                                                  std::to_string(pado::kLevelCap));
    for (long m : cfg.ms)
        if (m < 0 || m > pado::kLevelCap)
            throw CLI::ValidationError("--m", "levels must lie in 0.." +
                                                  std::to_string(pado::kLevelCap));
    for (long d : cfg.ds)
        if (d < 0 || d > pado::kDegreeCap)
            throw CLI::ValidationError("--d", "degrees must lie in 0.." +
                                                  std::to_string(pado::kDegreeCap));
    if (cfg.deg > pado::kDegreeCap)
        throw CLI::ValidationError("--deg", "degree bound capped at " +
                                                std::to_string(pado::kDegreeCap));
}

/* config file carries the same keys as the flags; flags win */
void apply_config(const std::string& path, GridConfig& cfg, std::string& out_format,
                  std::string& out_path, const CLI::App& app) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--config", std::string("parse error: ") + e.what());
    }
    auto list_key = [&](const char* key, const char* flag, std::vector<long>& into) {
        if (!j.contains(key) || app.count(flag) > 0) return;
        into.clear();
        if (j[key].is_array())
            for (const auto& v : j[key]) into.push_back(v.get<long>());
        else if (j[key].is_string())
            into = parse_list(j[key].get<std::string>(), flag);
        else
            into.push_back(j[key].get<long>());
    };
    list_key("p", "--p", cfg.ps);
    list_key("n", "--n", cfg.ns);
    list_key("m", "--m", cfg.ms);
    list_key("d", "--d", cfg.ds);
    if (j.contains("deg") && app.count("--deg") == 0) cfg.deg = j["deg"].get<int>();
    if (j.contains("quick") && app.count("--quick") == 0) cfg.quick = j["quick"].get<bool>();
    if (j.contains("jobs") && app.count("--jobs") == 0) cfg.jobs = j["jobs"].get<int>();
    if (j.contains("out") && app.count("--out") == 0)
        out_format = j["out"].get<std::string>();
    if (j.contains("out-path") && app.count("--out-path") == 0)
        out_path = j["out-path"].get<std::string>();
}

int write_output(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "verify: cannot open output path " << path << "\n";
        return 1;
    }
    out << body;
    if (!out) {
        std::cerr << "verify: write failed for " << path << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suites for the level algebras and their models"};
    app.require_subcommand(0, 0);

    std::string suite;
    std::string p_text, n_text, m_text, d_text;
    std::string out_format = "json";
    std::string out_path;
    std::string config_path;
    int deg = -1;
    int jobs = 1;
    bool quick = false;
    long fault = -1;

    app.add_option("suite", suite,
                   "suite name, 'all', or 'export-tree' (suites: arith, dist-pairing, closure, "
                   "cnj, hopf, charts, ideal, sandwich, rewrite, xi, theorem1, theorem2)")
        ->required();
    app.add_option("--p", p_text, "primes, e.g. 2,3,5");
    app.add_option("--n", n_text, "model levels, e.g. 0..3");
    app.add_option("--m", m_text, "algebra levels, e.g. 0,1");
    app.add_option("--d", d_text, "operator degrees, e.g. 1..8");
    app.add_option("--deg", deg, "weight/degree bound for basis sweeps");
    app.add_option("--out", out_format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out-path", out_path, "write the report here instead of stdout");
    app.add_option("--jobs", jobs, "worker threads (the report is identical at any value)")
        ->check(CLI::Range(1, 64));
    app.add_flag("--quick", quick, "smaller grids for a fast smoke pass");
    app.add_option("--config", config_path, "JSON file with the same keys; flags win");
    app.add_option("--inject-fault", fault, "invert one verdict, for pipeline tests")
        ->group("");

    try {
        app.parse(argc, argv);

        GridConfig cfg;
        if (!p_text.empty()) cfg.ps = parse_list(p_text, "--p");
        if (!n_text.empty()) cfg.ns = parse_list(n_text, "--n");
        if (!m_text.empty()) cfg.ms = parse_list(m_text, "--m");
        if (!d_text.empty()) cfg.ds = parse_list(d_text, "--d");
        cfg.deg = deg;
        cfg.quick = quick;
        cfg.jobs = jobs;
        if (!config_path.empty()) apply_config(config_path, cfg, out_format, out_path, app);
        validate_grid(cfg);

        if (suite == "export-tree") {
            if (cfg.ps.size() != 1 || cfg.ns.size() != 1) {
                std::cerr << "verify: export-tree needs exactly one --p and one --n\n";
                return 2;
            }
            if (out_path.empty()) {
                std::cerr << "verify: export-tree needs --out-path\n";
                return 2;
            }
            std::string body =
                pado::render_tree_json(cfg.ps[0], static_cast<unsigned>(cfg.ns[0]));
            return write_output(out_path, body);
        }

        std::vector<std::string> names;
        if (suite == "all") {
            names = pado::kSuiteNames;
        } else if (pado::is_suite_name(suite)) {
            names = {suite};
        } else {
            std::cerr << "verify: unknown suite '" << suite << "'\n";
            return 2;
        }

        std::vector<pado::SuiteReport> reports = pado::run_suites(names, cfg, fault);
        std::string body;
        if (out_format == "json")
            body = pado::render_json(reports);
        else if (out_format == "csv")
            body = pado::render_csv(reports);
        else
            body = pado::render_text(reports);

        int io = write_output(out_path, body);
        if (io != 0) return io;
        for (const pado::SuiteReport& r : reports)
            if (!r.ok()) return 1;
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        /* CLI11 returns 0 for --help; anything else is a usage error here */
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    }
}
