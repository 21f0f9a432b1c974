#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "metaplus/suites.hpp"

using namespace metaplus;

int main(int argc, char** argv) {
    CLI::App app{"metaplus: verification suites for the metaplectic Hecke algebra library"};
    app.require_subcommand(1);

    std::vector<std::string> suites;
    std::vector<int> extra_primes;
    std::vector<std::string> precision_flags;
    std::string s_grid, config_path, out_path, format = "text";
    int trunc = 0, samples = 0, k = -1;
    std::uint64_t seed = 0;
    bool timing = false;

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suites", suites, "suites to run (default: all)");
    verify->add_option("--config", config_path, "JSON config file; flags override it");
    verify->add_option("--p", extra_primes, "add primes to the prime set");
    verify->add_option("--precision", precision_flags, "p-adic precision as p=digits");
    verify->add_option("--s-grid", s_grid, "comma separated s values, e.g. 0,0.3,0.25+0.6i");
    verify->add_option("--trunc", trunc, "q-expansion truncation N");
    verify->add_option("--k", k, "k for the plus space of weight k+1/2");
    verify->add_option("--samples", samples, "random samples per prime");
    auto* seed_opt = verify->add_option("--seed", seed, "random seed");
    verify->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    verify->add_flag("--timing", timing, "record elapsed milliseconds per case");

    CLI::App* list = app.add_subcommand("list", "list suite names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (list->parsed()) {
        for (const std::string& s : suite_names()) std::cout << s << '\n';
        return 0;
    }

    SuiteConfig cfg;
    std::vector<SuiteReport> reports;
    try {
        if (!config_path.empty()) cfg = load_config(config_path, cfg);
        for (int p : extra_primes)
            if (std::find(cfg.primes.begin(), cfg.primes.end(), p) == cfg.primes.end()) cfg.primes.push_back(p);
        for (const std::string& f : precision_flags) {
            auto eq = f.find('=');
            if (eq == std::string::npos) throw ConfigError("--precision: expected p=digits, got '" + f + "'");
            try {
                cfg.precision[std::stoi(f.substr(0, eq))] = std::stoi(f.substr(eq + 1));
            } catch (const std::logic_error&) {
                throw ConfigError("--precision: expected p=digits, got '" + f + "'");
            }
        }
        if (!s_grid.empty()) {
            cfg.s_grid.clear();
            std::size_t start = 0;
            while (start <= s_grid.size()) {
                std::size_t comma = s_grid.find(',', start);
                std::string item = s_grid.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                try {
                    cfg.s_grid.push_back(parse_complex(item));
                } catch (const ConfigError& e) {
                    throw ConfigError(std::string("--s-grid: ") + e.what());
                }
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        if (trunc != 0) cfg.truncation = trunc;
        if (samples != 0) cfg.samples = samples;
        if (k >= 0) cfg.k = k;
        if (*seed_opt) cfg.seed = seed;
        cfg.timing = timing;
        reports = run(suites, cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    std::string body = format == "json" ? emit_json(reports) + "\n" : emit_text(reports);
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "config error: cannot write '" << out_path << "'\n";
            return 2;
        }
        out << body;
    }
    return all_passed(reports) ? 0 : 1;
}
