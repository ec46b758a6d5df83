// kuga: singularity analysis for Kuga varieties and the (p, n) region data.
//
// Subcommands:
//   rst     analyze a fixed-point scenario and print the verdict
//   tables  render the singularity-type table of a scenario
//   dims    dimension formulas (modular forms, Jacobi cusp form bound)
//   region  emit the (p, n) classification grid as CSV or JSON
//
// Exit codes for `rst`: 0 canonical, 10 not-canonical, 11 indeterminate.
// All subcommands: 2 on input errors; `region`: 3 on filesystem errors.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kuga/kuga.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotCanonical = 10;
constexpr int kExitIndeterminate = 11;
constexpr int kExitInputError = 2;
constexpr int kExitFsError = 3;

double snap_tol_from_env() {
    const char* env = std::getenv("KUGA_RST_TOL");
    if (!env)
        return kuga::kDefaultSnapTol;
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0))
        throw kuga::ParseError("KUGA_RST_TOL: expected a positive number, got '" +
                               std::string(env) + "'");
    return v;
}

kuga::Scenario make_scenario(const std::string& preset, const std::string& file,
                             int n, bool include_sigma) {
    if (!preset.empty() && !file.empty())
        throw kuga::ParseError("give either --preset or --file, not both");
    if (!preset.empty()) {
        if (auto s = kuga::preset_scenario(preset, n, include_sigma))
            return *s;
        throw kuga::ParseError("unknown preset '" + preset +
                               "' (expected C1, C2, Q1 or Q2)");
    }
    if (file.empty())
        throw kuga::ParseError("one of --preset or --file is required");
    kuga::Scenario s = kuga::load_scenario(file);
    // command-line n / sigma flags override nothing: the file is authoritative
    return s;
}

std::string verdict_text(const kuga::Verdict& v) {
    std::ostringstream os;
    os << "status: " << kuga::verdict_status_name(v.status) << "\n";
    if (v.witness) {
        os << "witness: k1=" << v.witness->k1 << " k2=" << v.witness->k2
           << " type=" << v.witness->type.str()
           << " rst_sum=" << v.witness->rst.str() << "\n";
    }
    os << "table:\n" << kuga::render_table(v.table);
    return os.str();
}

/// Write content to path via a temp file and rename, so readers never see a
/// half-written file.
void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::ios_base::failure("cannot open " + tmp + " for writing");
        out << content;
        out.flush();
        if (!out)
            throw std::ios_base::failure("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::ios_base::failure("cannot rename " + tmp + " to " + path);
    }
}

int run_rst(const std::string& preset, const std::string& file, int n,
            bool with_sigma, const std::string& format) {
    double tol = snap_tol_from_env();
    kuga::Scenario s = make_scenario(preset, file, n, with_sigma);
    kuga::Verdict v = kuga::analyze(s, tol);
    if (format == "json")
        std::cout << kuga::verdict_to_json(v).dump(2) << "\n";
    else
        std::cout << verdict_text(v);
    switch (v.status) {
    case kuga::VerdictStatus::canonical:
        return kExitOk;
    case kuga::VerdictStatus::not_canonical:
        return kExitNotCanonical;
    case kuga::VerdictStatus::indeterminate_quasi_reflection:
        return kExitIndeterminate;
    }
    return kExitInputError;
}

int run_tables(const std::string& preset, const std::string& file, int n,
               bool no_sigma, const std::string& format,
               const std::string& check_path) {
    double tol = snap_tol_from_env();
    kuga::Scenario s = make_scenario(preset, file, n, !no_sigma);
    std::vector<kuga::TableRow> rows = kuga::build_table(s, tol);
    std::string text = kuga::render_table(rows);
    if (!check_path.empty()) {
        std::ifstream in(check_path, std::ios::binary);
        if (!in)
            throw kuga::ParseError("cannot open fixture: " + check_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        if (buf.str() != text) {
            std::cerr << "mismatch against " << check_path << "\n--- expected\n"
                      << buf.str() << "--- got\n"
                      << text;
            return 1;
        }
        std::cout << "match: " << check_path << "\n";
        return kExitOk;
    }
    if (format == "json")
        std::cout << kuga::table_to_json(rows).dump(2) << "\n";
    else
        std::cout << text;
    return kExitOk;
}

int run_region(long long p_max, long long n_max, const std::string& format,
               const std::string& out, const std::string& plot_data) {
    std::vector<kuga::RegionCell> cells = kuga::region_grid(p_max, n_max);
    std::string content = format == "json"
                              ? kuga::region_to_json(cells).dump(2) + "\n"
                              : kuga::region_csv(cells);
    try {
        if (out.empty())
            std::cout << content;
        else
            write_atomic(out, content);
        if (!plot_data.empty()) {
            std::ostringstream os;
            os << "# p n rgt(1)/unknown(0)\n";
            for (const kuga::RegionCell& c : cells)
                os << c.p << " " << c.n << " "
                   << (c.status == kuga::RegionStatus::rgt ? 1 : 0) << "\n";
            write_atomic(plot_data, os.str());
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFsError;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical-singularity analysis for Kuga varieties"};
    app.require_subcommand(1);

    // rst
    auto* rst = app.add_subcommand("rst", "Analyze a fixed-point scenario");
    std::string rst_preset, rst_file, rst_format = "text";
    int rst_n = 1;
    bool rst_sigma = false;
    rst->add_option("--preset", rst_preset, "Preset scenario: C1, C2, Q1, Q2");
    rst->add_option("--file", rst_file, "Scenario JSON file");
    rst->add_option("--n", rst_n, "Fiber dimension")->check(CLI::NonNegativeNumber);
    rst->add_flag("--with-sigma", rst_sigma, "Include the central involution");
    rst->add_option("--format", rst_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    // tables
    auto* tables = app.add_subcommand("tables", "Render the singularity-type table");
    std::string tab_preset, tab_file, tab_format = "text", tab_check;
    int tab_n = 1;
    bool tab_no_sigma = false;
    tables->add_option("--preset", tab_preset, "Preset scenario: C1, C2, Q1, Q2");
    tables->add_option("--file", tab_file, "Scenario JSON file");
    tables->add_option("--n", tab_n, "Fiber dimension")->check(CLI::NonNegativeNumber);
    tables->add_flag("--no-sigma", tab_no_sigma, "Drop the involution column");
    tables->add_option("--format", tab_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    tables->add_option("--check", tab_check, "Compare against a fixture file");

    // dims
    auto* dims = app.add_subcommand("dims", "Dimension formulas");
    dims->require_subcommand(1);
    auto* mr = dims->add_subcommand("mr", "Dimension of weight-r modular forms");
    long long mr_r = 0;
    mr->add_option("--r", mr_r, "Weight")->required();
    auto* jac = dims->add_subcommand("jacobi", "Jacobi cusp form lower bound");
    long long jac_k = 0, jac_p = 0;
    jac->add_option("--k", jac_k, "Weight")->required();
    jac->add_option("--p", jac_p, "Index")->required();
    auto* mp = dims->add_subcommand("min-prime",
                                    "Smallest prime with a positive bound");
    long long mp_k = 0, mp_pmax = 1000;
    mp->add_option("--k", mp_k, "Weight")->required();
    mp->add_option("--p-max", mp_pmax, "Search bound");

    // region
    auto* region = app.add_subcommand("region", "Emit the (p, n) region grid");
    long long reg_pmax = 37, reg_nmax = 6;
    std::string reg_format = "csv", reg_out, reg_plot;
    region->add_option("--p-max", reg_pmax, "Largest prime level");
    region->add_option("--n-max", reg_nmax, "Largest fiber dimension");
    region->add_option("--format", reg_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    region->add_option("--out", reg_out, "Output file (written atomically)");
    region->add_option("--plot-data", reg_plot, "Companion plot data file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (rst->parsed())
            return run_rst(rst_preset, rst_file, rst_n, rst_sigma, rst_format);
        if (tables->parsed())
            return run_tables(tab_preset, tab_file, tab_n, tab_no_sigma,
                              tab_format, tab_check);
        if (dims->parsed()) {
            if (mr->parsed())
                std::cout << kuga::dim_m(mr_r) << "\n";
            else if (jac->parsed())
                std::cout << kuga::jacobi_lower_bound(jac_k, jac_p) << "\n";
            else if (mp->parsed()) {
                auto p = kuga::minimal_prime(mp_k, mp_pmax);
                std::cout << (p ? std::to_string(*p) : std::string("none"))
                          << "\n";
            }
            return kExitOk;
        }
        if (region->parsed())
            return run_region(reg_pmax, reg_nmax, reg_format, reg_out, reg_plot);
    } catch (const kuga::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
