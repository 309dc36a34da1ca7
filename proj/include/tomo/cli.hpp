#pragma once

// Command-line frontend: option parsing, command dispatch, CSV and JSON output.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tomo/bodies.hpp"
#include "tomo/bp.hpp"
#include "tomo/errors.hpp"
#include "tomo/inversion.hpp"
#include "tomo/radon.hpp"
#include "tomo/rules.hpp"
#include "tomo/sections.hpp"

namespace tomo::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResolution = 3;

inline const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"sections", "radon", "invert", "constants", "bp-check", "scan"};
    return names;
}

struct RunConfig {
    std::string command;
    std::string help_text; ///< set instead of a command when --help was given
    int dim = 0;
    std::string body = "ball:r=1";
    std::string body_k;
    std::string body_l;
    RuleConfig rules;
    int directions = 0;        ///< > 0: seeded random directions replace the product grid
    std::uint64_t seed = 1;
    std::vector<double> xi;    ///< explicit direction for `sections`
    int t_count = 21;
    double power = 1.0;        ///< `radon` transforms rho_K^power
    std::vector<double> eps;
    int degree = 4;
    int meridian = 9;
    bool scan_l = false;
    std::string out;           ///< CSV path; stdout when empty
    std::string json;          ///< summary path; stdout when empty

    nlohmann::ordered_json echo() const
    {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["dim"] = dim;
        if (command == "bp-check") {
            j["k"] = body_k;
            j["l"] = body_l;
        } else if (command != "constants" && command != "scan") {
            j["body"] = body;
        }
        j["section_level"] = rules.section_level;
        j["radon_level"] = rules.radon_level;
        j["support_level"] = rules.support_level;
        j["grid_level"] = rules.grid_level;
        j["scan_points"] = rules.scan_points;
        j["gauss_nodes"] = rules.gauss_nodes;
        j["gauss_panels"] = rules.gauss_panels;
        j["delta_frac"] = rules.delta_frac;
        j["cutoff_factor"] = rules.cutoff_factor;
        j["step_frac"] = rules.step_frac;
        j["directions"] = directions;
        j["seed"] = seed;
        if (!xi.empty()) j["xi"] = xi;
        if (command == "sections") j["t_count"] = t_count;
        if (command == "radon") j["power"] = power;
        if (command == "scan") {
            j["d"] = degree;
            j["eps"] = eps;
            j["meridian"] = meridian;
        }
        if (command == "bp-check") j["scan_l"] = scan_l;
        return j;
    }
};

namespace detail {

/// `a:b:step` (inclusive) or a comma list.
inline std::vector<double> parse_eps(const std::string& text)
{
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<double> parts;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ':')) parts.push_back(tomo::detail::parse_double(tok, "eps range"));
        if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0])
            throw UsageError("--eps range must be a:b:step with a <= b and step > 0");
        const long count = std::lround(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9)) + 1;
        for (long i = 0; i < count; ++i) out.push_back(parts[0] + static_cast<double>(i) * parts[2]);
        return out;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tomo::detail::parse_double(tok, "eps list"));
    if (out.empty()) throw UsageError("--eps needs at least one value");
    return out;
}

inline std::vector<double> parse_list(const std::string& text, const char* what)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tomo::detail::parse_double(tok, what));
    return out;
}

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Flat key=value lines become `--key=value` tokens; '#' starts a comment.
inline std::vector<std::string> read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file: " + path);
    std::vector<std::string> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || key == "config")
            throw UsageError(path + ":" + std::to_string(lineno) + ": invalid key");
        tokens.push_back("--" + key + "=" + value);
    }
    return tokens;
}

inline std::optional<std::string> find_config_path(const std::vector<std::string>& args)
{
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
    }
    return std::nullopt;
}

} // namespace detail

/// Parses the arguments after the program name.
inline RunConfig parse_args(std::vector<std::string> args)
{
    CLI::App app{"Sections, spherical Radon transform and its inversion for star bodies in R^n", "tomo"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(0, 1);
    app.footer("Commands: sections, radon, invert, constants, bp-check, scan.\n"
               "Option values may also come from --config FILE (key=value lines); flags win.\n"
               "Exit status: 0 success, 2 usage error, 3 numerical resolution failure.");

    std::vector<CLI::App*> subs;
    subs.push_back(app.add_subcommand("sections", "dump A_xi(t) on [0, h_K(xi)] as CSV"));
    subs.push_back(app.add_subcommand("radon", "spherical Radon transform of rho_K^power on a direction grid"));
    subs.push_back(app.add_subcommand("invert", "inverse Radon transform of rho_K with roundtrip check"));
    subs.push_back(app.add_subcommand("constants", "a_k, S_n and kappa_n for one dimension"));
    subs.push_back(app.add_subcommand("bp-check", "compare central sections and volumes of K and L"));
    subs.push_back(app.add_subcommand("scan", "sign of the inverse over perturbed balls"));
    for (auto* s : subs) s->fallthrough();

    int dim = 0;
    std::string body = "ball:r=1", body_k, body_l, xi_text, eps_text, out, json, config_path;
    std::optional<int> section_level, radon_level, support_level, grid_level, scan_points, gauss_nodes, gauss_panels;
    std::optional<double> delta_frac, cutoff_factor, step2, step4, step6, step8;
    int directions = 0, t_count = 21, degree = 4, meridian = 9;
    std::uint64_t seed = 1;
    double power = 1.0;
    bool scan_l = false;

    app.add_option("--dim", dim, "ambient dimension n (3..8)")->check(CLI::Range(3, 8));
    app.add_option("--body", body, "body spec, e.g. ball:r=1, ellipsoid:a=1,2,3, lp:p=1.5, pball:eps=0.3,d=4");
    app.add_option("--k", body_k, "bp-check: body K");
    app.add_option("--l", body_l, "bp-check: body L");
    app.add_option("--section-level", section_level, "rule level on S^{n-2} inside a section")->check(CLI::PositiveNumber);
    app.add_option("--radon-level", radon_level, "rule level on S^{n-2} for the Radon transform")->check(CLI::PositiveNumber);
    app.add_option("--support-level", support_level, "rule level on S^{n-1} for seeds and volumes")->check(CLI::PositiveNumber);
    app.add_option("--grid-level", grid_level, "output grid: nodes of this S^{n-1} rule level")->check(CLI::PositiveNumber);
    app.add_option("--scan-points", scan_points, "membership samples per ray")->check(CLI::Range(2, 1 << 20));
    app.add_option("--gauss-nodes", gauss_nodes, "Gauss nodes per panel on [delta, T]")->check(CLI::PositiveNumber);
    app.add_option("--gauss-panels", gauss_panels, "panels on [delta, T]")->check(CLI::PositiveNumber);
    app.add_option("--delta-frac", delta_frac, "inner split delta as a fraction of the support bound");
    app.add_option("--cutoff-factor", cutoff_factor, "outer split T as a multiple of h_K(xi)");
    app.add_option("--step2", step2, "derivative step / support, order 2");
    app.add_option("--step4", step4, "derivative step / support, order 4");
    app.add_option("--step6", step6, "derivative step / support, order 6");
    app.add_option("--step8", step8, "derivative step / support, order 8");
    app.add_option("--directions", directions, "use this many seeded random directions")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "seed for random directions");
    app.add_option("--xi", xi_text, "sections: direction as comma list (normalized)");
    app.add_option("--t-count", t_count, "sections: samples on [0, h_K(xi)]")->check(CLI::Range(2, 100000));
    app.add_option("--power", power, "radon: transform rho_K^power");
    app.add_option("--eps", eps_text, "scan: a:b:step or comma list");
    app.add_option("--d", degree, "scan: degree of the zonal perturbation (2, 4, 6)");
    app.add_option("--meridian", meridian, "scan: directions on a meridian")->check(CLI::Range(2, 100000));
    app.add_flag("--scan-l", scan_l, "bp-check: also report the sign of the inverse of rho_L");
    app.add_option("--out", out, "CSV output path (default stdout)");
    app.add_option("--json", json, "summary JSON path (default stdout)");
    app.add_option("--config", config_path, "key=value file mirroring the long flags");

    std::vector<std::string> merged;
    if (const auto path = detail::find_config_path(args)) {
        for (auto& tok : detail::read_config_file(*path)) {
            const std::string name = tok.substr(0, tok.find('='));
            if (app.get_option_no_throw(name) == nullptr)
                throw UsageError("unknown key in config file: " + name.substr(2));
            merged.push_back(std::move(tok));
        }
    }
    merged.insert(merged.end(), args.begin(), args.end());
    // CLI11 consumes the vector from the back
    std::reverse(merged.begin(), merged.end());

    RunConfig cfg;
    try {
        app.parse(merged);
    } catch (const CLI::CallForHelp&) {
        cfg.help_text = app.help();
        return cfg;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (auto* s : subs)
        if (s->parsed()) cfg.command = s->get_name();
    if (cfg.command.empty()) throw UsageError("a command is required: sections, radon, invert, constants, bp-check, scan");
    if (dim == 0) throw UsageError("--dim is required");

    cfg.dim = dim;
    cfg.body = body;
    cfg.body_k = body_k;
    cfg.body_l = body_l;
    cfg.rules = RuleConfig::defaults(dim);
    if (section_level) cfg.rules.section_level = *section_level;
    if (radon_level) cfg.rules.radon_level = *radon_level;
    if (support_level) cfg.rules.support_level = *support_level;
    if (grid_level) cfg.rules.grid_level = *grid_level;
    if (scan_points) cfg.rules.scan_points = *scan_points;
    if (gauss_nodes) cfg.rules.gauss_nodes = *gauss_nodes;
    if (gauss_panels) cfg.rules.gauss_panels = *gauss_panels;
    if (delta_frac) cfg.rules.delta_frac = *delta_frac;
    if (cutoff_factor) cfg.rules.cutoff_factor = *cutoff_factor;
    const std::optional<double> steps[] = {step2, step4, step6, step8};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!steps[i]) continue;
        if (!(*steps[i] > 0.0 && *steps[i] < 0.2)) throw UsageError("derivative step fractions must lie in (0, 0.2)");
        cfg.rules.step_frac[i] = *steps[i];
    }
    if (!(cfg.rules.delta_frac > 0.0 && cfg.rules.delta_frac < 0.5)) throw UsageError("--delta-frac must lie in (0, 0.5)");
    if (!(cfg.rules.cutoff_factor >= 1.0)) throw UsageError("--cutoff-factor must be at least 1");

    cfg.directions = directions;
    cfg.seed = seed;
    cfg.t_count = t_count;
    cfg.power = power;
    cfg.degree = degree;
    cfg.meridian = meridian;
    cfg.scan_l = scan_l;
    cfg.out = out;
    cfg.json = json;
    try {
        if (!xi_text.empty()) {
            cfg.xi = detail::parse_list(xi_text, "--xi");
            if (static_cast<int>(cfg.xi.size()) != dim) throw UsageError("--xi needs exactly n components");
        }
        if (cfg.command == "scan") {
            if (eps_text.empty()) throw UsageError("scan needs --eps");
            cfg.eps = detail::parse_eps(eps_text);
        }
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }
    if (cfg.command == "bp-check" && (body_k.empty() || body_l.empty()))
        throw UsageError("bp-check needs --k and --l");
    return cfg;
}

inline RunConfig parse_args(int argc, const char* const* argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return parse_args(std::move(args));
}

/// Twelve significant digits; negative zero prints as 0.
inline std::string format_number(double x)
{
    if (x == 0.0) x = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(const std::vector<std::string>& cells)
    {
        if (cells.size() != header_.size()) throw std::logic_error("csv row width mismatch");
        rows_.push_back(cells);
    }
    std::size_t rows() const noexcept { return rows_.size(); }

    std::string str() const
    {
        std::string s;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) s += ',';
                s += cells[i];
            }
            s += '\n';
        };
        line(header_);
        for (const auto& r : rows_) line(r);
        return s;
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

inline std::vector<std::string> direction_header(int n)
{
    std::vector<std::string> h;
    for (int i = 1; i <= n; ++i) h.push_back("xi_" + std::to_string(i));
    return h;
}

inline std::vector<std::string> direction_cells(const Direction& xi)
{
    std::vector<std::string> c;
    for (int i = 0; i < xi.dim(); ++i) c.push_back(format_number(xi[i]));
    return c;
}

inline std::vector<double> to_vector(const Direction& xi)
{
    std::vector<double> v;
    for (int i = 0; i < xi.dim(); ++i) v.push_back(xi[i]);
    return v;
}

struct Artifacts {
    CsvTable csv{{}};
    nlohmann::ordered_json results;
};

inline std::vector<Direction> output_grid(const RunConfig& cfg)
{
    if (cfg.directions > 0) return random_directions(cfg.dim, cfg.directions, cfg.seed);
    return direction_grid(cfg.dim, cfg.rules.grid_level);
}

inline Artifacts run_sections(const RunConfig& cfg, const RuleBook& rules)
{
    const auto body = make_body(cfg.body, cfg.dim);
    std::vector<Direction> dirs;
    if (!cfg.xi.empty()) dirs.push_back(Direction::normalized(VecN::from(cfg.xi)));
    else if (cfg.directions > 0) dirs = random_directions(cfg.dim, cfg.directions, cfg.seed);
    else dirs.push_back(Direction::axis(cfg.dim, 0));

    auto header = direction_header(cfg.dim);
    header.insert(header.end(), {"t", "A"});
    Artifacts a{CsvTable(header), nlohmann::ordered_json::array()};
    for (const auto& xi : dirs) {
        const SectionEvaluator eval(body, xi, rules);
        const double h = eval.support();
        const auto prof = profile(body, eval, uniform_grid(h / (cfg.t_count - 1), cfg.t_count));
        for (std::size_t j = 0; j < prof.ts.size(); ++j) {
            auto row = direction_cells(xi);
            row.push_back(format_number(prof.ts[j]));
            row.push_back(format_number(prof.values[j]));
            a.csv.add_row(row);
        }
        a.results.push_back({{"xi", to_vector(xi)}, {"support", h}, {"central_section", prof.values.front()}});
    }
    return a;
}

inline Artifacts run_radon(const RunConfig& cfg, const RuleBook& rules)
{
    const auto body = make_body(cfg.body, cfg.dim);
    const double power = cfg.power;
    const SphereFunction f{cfg.dim, [&](const VecN& v) { return std::pow(body.radial_unit(v), power); }, true};
    const auto grid = output_grid(cfg);
    const auto values = radon_field(f, grid, rules.radon());

    auto header = direction_header(cfg.dim);
    header.push_back("radon");
    Artifacts a{CsvTable(header), {}};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto row = direction_cells(grid[i]);
        row.push_back(format_number(values[i]));
        a.csv.add_row(row);
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    a.results = {{"grid_size", grid.size()}, {"min", *lo}, {"max", *hi}, {"subsphere_area", sphere_area(cfg.dim - 2)}};
    return a;
}

inline Artifacts run_invert(const RunConfig& cfg, const RuleBook& rules)
{
    const auto body = make_body(cfg.body, cfg.dim);
    const auto grid = output_grid(cfg);
    const auto field = inverse_radon(body, grid, rules, true);

    auto header = direction_header(cfg.dim);
    header.insert(header.end(), {"rho_hat", "rho_true", "abs_err"});
    Artifacts a{CsvTable(header), {}};
    double max_rel = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double err = std::abs(field.rho_hat[i] - field.rho_true[i]);
        max_rel = std::max(max_rel, err / field.rho_true[i]);
        auto row = direction_cells(grid[i]);
        row.push_back(format_number(field.rho_hat[i]));
        row.push_back(format_number(field.rho_true[i]));
        row.push_back(format_number(err));
        a.csv.add_row(row);
    }
    const auto [lo, hi] = std::minmax_element(field.inverse.begin(), field.inverse.end());
    a.results = {{"method", field.method},
                 {"grid_size", grid.size()},
                 {"min_inverse", *lo},
                 {"max_inverse", *hi},
                 {"normalized_min", field.normalized_min()},
                 {"argmin", to_vector(field.grid[field.argmin])},
                 {"roundtrip", {{"max_abs_err", field.max_abs_err}, {"max_rel_err", max_rel}}},
                 {"smooth", body.smooth()}};
    if (!body.smooth()) a.results["note"] = body.note();
    return a;
}

inline Artifacts run_constants(const RunConfig& cfg)
{
    const int n = cfg.dim;
    const auto c = coefficients(n);
    Artifacts a{CsvTable({"name", "k", "value"}), {}};
    for (std::size_t k = 0; k < c.a.size(); ++k)
        a.csv.add_row({"a", std::to_string(k), format_number(c.a[k])});
    a.csv.add_row({"kappa", "", format_number(c.kappa)});
    a.results = {{"kappa", c.kappa}, {"a", c.a}};
    if (c.series_sum) {
        const double s = *c.series_sum;
        const double identity = -2.0 * sphere_area(n - 2) * sphere_area(n - 3) * s / (n - 2);
        a.csv.add_row({"S", "", format_number(s)});
        a.csv.add_row({"identity", "", format_number(identity)});
        a.results["S"] = s;
        a.results["series_tail"] = c.series_tail;
        a.results["terms"] = c.terms;
        a.results["accelerated"] = c.accelerated;
        a.results["identity"] = identity;
        a.results["identity_residual"] = std::abs(identity - c.kappa);
        a.results["gaussian_S"] = gaussian_crosscheck(n);
    }
    return a;
}

inline Artifacts run_bp(const RunConfig& cfg, const RuleBook& rules)
{
    const auto k = make_body(cfg.body_k, cfg.dim);
    const auto l = make_body(cfg.body_l, cfg.dim);
    const auto grid = output_grid(cfg);
    const auto r = bp_experiment(k, l, grid, rules, cfg.scan_l);

    auto header = direction_header(cfg.dim);
    header.insert(header.end(), {"section_k", "section_l", "margin"});
    Artifacts a{CsvTable(header), {}};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto row = direction_cells(grid[i]);
        row.push_back(format_number(r.dominance.sections_k[i]));
        row.push_back(format_number(r.dominance.sections_l[i]));
        row.push_back(format_number(r.dominance.sections_l[i] - r.dominance.sections_k[i]));
        a.csv.add_row(row);
    }
    a.results = {{"k", r.body_k},
                 {"l", r.body_l},
                 {"verdict", r.verdict},
                 {"dominance", {{"holds", r.dominance.holds},
                                {"violations", r.dominance.violations},
                                {"worst_margin", r.dominance.worst_margin},
                                {"margin_error", r.dominance.margin_error}}},
                 {"volume_k", r.volume_k},
                 {"volume_l", r.volume_l},
                 {"volume_error", r.volume_error}};
    if (r.min_inverse_l) {
        a.results["normalized_min_inverse_l"] = *r.min_inverse_l;
        a.results["curvature_checked"] = false;
    }
    return a;
}

inline Artifacts run_scan(const RunConfig& cfg, const RuleBook& rules)
{
    const auto grid = meridian_grid(cfg.dim, cfg.meridian);
    const auto res = perturbation_scan(cfg.dim, cfg.degree, cfg.eps, grid, rules);
    Artifacts a{CsvTable({"eps", "min"}), {}};
    for (const auto& row : res.rows) a.csv.add_row({format_number(row.eps), format_number(row.min_value)});
    a.results = {{"d", cfg.degree}, {"rows", res.rows.size()}};
    a.results["first_negative"] = res.first_negative ? nlohmann::ordered_json(*res.first_negative) : nullptr;
    a.results["sign_change"] = res.first_negative.has_value() && !res.rows.empty() && res.rows.front().min_value > 0.0;
    return a;
}

inline void emit(const std::string& path, const std::string& text, std::ostream& fallback)
{
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

/// Executes one command; artifacts go to the configured paths or to `out`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!cfg.help_text.empty()) {
        out << cfg.help_text;
        return kExitOk;
    }
    try {
        Artifacts a;
        if (cfg.command == "constants") {
            a = run_constants(cfg);
        } else {
            const RuleBook rules(cfg.dim, cfg.rules);
            if (cfg.command == "sections") a = run_sections(cfg, rules);
            else if (cfg.command == "radon") a = run_radon(cfg, rules);
            else if (cfg.command == "invert") a = run_invert(cfg, rules);
            else if (cfg.command == "bp-check") a = run_bp(cfg, rules);
            else if (cfg.command == "scan") a = run_scan(cfg, rules);
            else throw UsageError("unknown command: " + cfg.command);
        }
        nlohmann::ordered_json summary;
        summary["command"] = cfg.command;
        summary["config_echo"] = cfg.echo();
        summary["results"] = a.results;
        emit(cfg.out, a.csv.str(), out);
        emit(cfg.json, summary.dump(2) + "\n", out);
        return kExitOk;
    } catch (const ResolutionError& e) {
        err << "resolution failure: " << e.what() << "\n";
        return kExitResolution;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}

/// parse_args + run with exit-status mapping, as used by the executable.
inline int main_entry(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    RunConfig cfg;
    try {
        cfg = parse_args(argc, argv);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nrun with --help for the list of commands and options\n";
        return kExitUsage;
    }
    return run(cfg, out, err);
}

} // namespace tomo::cli
