#include "rscl/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rscl {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct RawEntry {
    std::string section, key, value;
    int line;
};

struct RawDoc {
    std::vector<RawEntry> entries;
    std::vector<ConfigIssue> errors;

    const RawEntry* find(const std::string& sec, const std::string& key) const {
        for (const auto& e : entries)
            if (e.section == sec && e.key == key) return &e;
        return nullptr;
    }
};

RawDoc scan(const std::string& text) {
    RawDoc doc;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    std::set<std::pair<std::string, std::string>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']') {
                doc.errors.push_back({lineno, "malformed section header: " + t});
                continue;
            }
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos) {
            doc.errors.push_back({lineno, "expected `key = value`: " + t});
            continue;
        }
        if (section.empty()) {
            doc.errors.push_back({lineno, "key outside any [section]: " + t});
            continue;
        }
        RawEntry e{section, trim(t.substr(0, eq)), trim(t.substr(eq + 1)), lineno};
        if (e.key.empty() || e.value.empty()) {
            doc.errors.push_back({lineno, "empty key or value"});
            continue;
        }
        if (!seen.insert({e.section, e.key}).second) {
            doc.errors.push_back({lineno, "duplicate key `" + e.key + "` in [" + e.section + "]"});
            continue;
        }
        doc.entries.push_back(std::move(e));
    }
    return doc;
}

struct Extractor {
    const RawDoc& doc;
    std::vector<ConfigIssue>& errors;
    std::set<std::pair<std::string, std::string>> consumed;

    const RawEntry* take(const std::string& sec, const std::string& key) {
        const RawEntry* e = doc.find(sec, key);
        if (e) consumed.insert({sec, key});
        return e;
    }

    bool real(const std::string& sec, const std::string& key, double& out, bool required) {
        const RawEntry* e = take(sec, key);
        if (!e) {
            if (required)
                errors.push_back({0, "missing required key `" + key + "` in [" + sec + "]"});
            return false;
        }
        char* end = nullptr;
        out = std::strtod(e->value.c_str(), &end);
        if (end == e->value.c_str() || *end != '\0' || !std::isfinite(out)) {
            errors.push_back({e->line, "`" + key + "` expects a real number, got `" + e->value + "`"});
            return false;
        }
        return true;
    }

    bool integer(const std::string& sec, const std::string& key, int& out, bool required) {
        const RawEntry* e = take(sec, key);
        if (!e) {
            if (required)
                errors.push_back({0, "missing required key `" + key + "` in [" + sec + "]"});
            return false;
        }
        char* end = nullptr;
        long v = std::strtol(e->value.c_str(), &end, 10);
        if (end == e->value.c_str() || *end != '\0') {
            errors.push_back({e->line, "`" + key + "` expects an integer, got `" + e->value + "`"});
            return false;
        }
        out = static_cast<int>(v);
        return true;
    }

    bool str(const std::string& sec, const std::string& key, std::string& out, bool required) {
        const RawEntry* e = take(sec, key);
        if (!e) {
            if (required)
                errors.push_back({0, "missing required key `" + key + "` in [" + sec + "]"});
            return false;
        }
        out = e->value;
        return true;
    }

    int line_of(const std::string& sec, const std::string& key) const {
        const RawEntry* e = doc.find(sec, key);
        return e ? e->line : 0;
    }

    void flag_unknown() {
        static const std::set<std::string> sections = {"flux", "ic", "grid", "solver", "output"};
        for (const auto& e : doc.entries) {
            if (!sections.count(e.section)) {
                errors.push_back({e.line, "unknown section [" + e.section + "]"});
                continue;
            }
            if (!consumed.count({e.section, e.key}))
                errors.push_back({e.line, "unknown key `" + e.key + "` in [" + e.section + "]"});
        }
    }
};

const std::map<std::string, std::vector<std::string>> kIcRequired = {
    {"gaussian", {"a", "x0", "sigma"}},
    {"sine", {"a", "k"}},
    {"riemann_tanh", {"ul", "ur", "x0", "delta"}},
    {"bump_slope", {"m", "width", "x0"}},
};

const std::map<std::string, std::vector<std::string>> kIcOptional = {
    {"riemann_tanh", {"ramp_x0", "ramp_delta"}},
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

ParseResult parse_config(const std::string& text) {
    ParseResult res;
    RawDoc doc = scan(text);
    res.errors = doc.errors;
    Extractor ex{doc, res.errors, {}};

    ScenarioConfig c;
    ex.str("flux", "flux", c.flux_name, true);
    bool has_beta = ex.real("flux", "beta", c.flux_beta, false);
    if (c.flux_name == "cosine") {
        if (!has_beta)
            res.errors.push_back({0, "missing required key `beta` in [flux] (cosine flux)"});
        else if (!(c.flux_beta > 0.0 && c.flux_beta < 1.0))
            res.errors.push_back({ex.line_of("flux", "beta"), "`beta` must lie in (0,1)"});
    } else if (c.flux_name == "burgers") {
        if (has_beta)
            res.errors.push_back({ex.line_of("flux", "beta"), "`beta` is only valid for the cosine flux"});
    } else if (!c.flux_name.empty()) {
        res.errors.push_back({ex.line_of("flux", "flux"),
                              "unknown flux `" + c.flux_name + "` (expected burgers or cosine)"});
    }

    ex.str("ic", "ic", c.ic_name, true);
    if (!c.ic_name.empty()) {
        auto it = kIcRequired.find(c.ic_name);
        if (it == kIcRequired.end()) {
            res.errors.push_back({ex.line_of("ic", "ic"), "unknown ic `" + c.ic_name + "`"});
        } else {
            for (const auto& key : it->second) {
                double v;
                if (ex.real("ic", key, v, true)) c.ic_params[key] = v;
            }
            auto opt = kIcOptional.find(c.ic_name);
            if (opt != kIcOptional.end()) {
                for (const auto& key : opt->second) {
                    double v;
                    if (ex.real("ic", key, v, false)) c.ic_params[key] = v;
                }
            }
        }
    }

    const bool has_lo = ex.real("grid", "x_min", c.x_min, true);
    const bool has_hi = ex.real("grid", "x_max", c.x_max, true);
    if (has_lo && has_hi && !(c.x_max > c.x_min))
        res.errors.push_back({ex.line_of("grid", "x_max"), "`x_max` must exceed `x_min`"});
    if (ex.integer("grid", "n", c.n, true) && c.n < 8)
        res.errors.push_back({ex.line_of("grid", "n"), "`n` must be >= 8"});

    if (ex.real("solver", "ell", c.ell, true) && !(c.ell > 0.0))
        res.errors.push_back({ex.line_of("solver", "ell"), "`ell` must be > 0"});
    if (ex.real("solver", "epsilon", c.epsilon, false) && !(c.epsilon >= 0.0))
        res.errors.push_back({ex.line_of("solver", "epsilon"), "`epsilon` must be >= 0"});
    if (ex.real("solver", "t_final", c.t_final, true) && !(c.t_final > 0.0))
        res.errors.push_back({ex.line_of("solver", "t_final"), "`t_final` must be > 0"});
    if (ex.real("solver", "cfl", c.cfl, false) && !(c.cfl > 0.0 && c.cfl <= 1.0))
        res.errors.push_back({ex.line_of("solver", "cfl"), "`cfl` must lie in (0,1]"});
    if (ex.integer("solver", "record_every", c.record_every, false) && c.record_every < 1)
        res.errors.push_back({ex.line_of("solver", "record_every"), "`record_every` must be >= 1"});

    ex.str("output", "csv", c.csv_path, false);
    ex.str("output", "ndjson", c.ndjson_path, false);
    if (ex.integer("output", "snapshot_every", c.snapshot_every, false) && c.snapshot_every < 0)
        res.errors.push_back({ex.line_of("output", "snapshot_every"), "`snapshot_every` must be >= 0"});

    ex.flag_unknown();

    if (!res.errors.empty()) return res;

    // Structural checks passed; the remaining validations need the assembled scenario.
    if (c.epsilon >= 1.0)
        res.warnings.push_back({ex.line_of("solver", "epsilon"), "epsilon < 1 is recommended"});
    if (c.ic_name == "sine") {
        double cycles = c.ic_params.at("k") * (c.x_max - c.x_min) / (2.0 * M_PI);
        if (std::abs(cycles - std::round(cycles)) > 1e-9)
            res.warnings.push_back(
                {ex.line_of("ic", "k"), "sine ic is not periodic on this domain (k*width/2pi not integral)"});
    }
    try {
        Field u0 = build_initial(c);
        if (!u0.all_finite()) {
            res.errors.push_back({0, "initial condition produces non-finite values"});
            return res;
        }
        FluxModel flux = c.make_flux();
        double speed = 0.0;
        for (double u : u0.v) speed = std::max(speed, std::abs(flux.f1(u)));
        // Green kernel decays like exp(-d/ell); data must not feel the wrap over [0,T]
        const double needed = 10.0 * c.ell + speed * c.t_final;
        if (0.5 * (c.x_max - c.x_min) < needed)
            res.warnings.push_back(
                {0, "domain half-width " + fmt(0.5 * (c.x_max - c.x_min)) +
                        " is below 10*ell + max|f'|*T = " + fmt(needed) +
                        "; wrap-around influence may contaminate the run"});
    } catch (const std::exception& e) {
        res.errors.push_back({0, std::string("initial condition rejected: ") + e.what()});
        return res;
    }

    res.config = std::move(c);
    return res;
}

ParseResult parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ParseResult res;
        res.errors.push_back({0, "cannot open config file: " + path});
        return res;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string render_config(const ScenarioConfig& c) {
    std::ostringstream out;
    out << "[flux]\n";
    out << "flux = " << c.flux_name << "\n";
    if (c.flux_name == "cosine") out << "beta = " << fmt(c.flux_beta) << "\n";
    out << "\n[ic]\n";
    out << "ic = " << c.ic_name << "\n";
    for (const auto& [k, v] : c.ic_params) out << k << " = " << fmt(v) << "\n";
    out << "\n[grid]\n";
    out << "x_min = " << fmt(c.x_min) << "\n";
    out << "x_max = " << fmt(c.x_max) << "\n";
    out << "n = " << c.n << "\n";
    out << "\n[solver]\n";
    out << "ell = " << fmt(c.ell) << "\n";
    out << "epsilon = " << fmt(c.epsilon) << "\n";
    out << "t_final = " << fmt(c.t_final) << "\n";
    out << "cfl = " << fmt(c.cfl) << "\n";
    out << "record_every = " << c.record_every << "\n";
    out << "\n[output]\n";
    if (!c.csv_path.empty()) out << "csv = " << c.csv_path << "\n";
    if (!c.ndjson_path.empty()) out << "ndjson = " << c.ndjson_path << "\n";
    out << "snapshot_every = " << c.snapshot_every << "\n";
    return out.str();
}

Field builtin_ic(const std::string& name, const std::map<std::string, double>& params,
                 const Grid1D& grid) {
    auto get = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument("ic `" + name + "`: missing parameter `" + key + "`");
        return it->second;
    };
    auto get_or = [&](const std::string& key, double dflt) {
        auto it = params.find(key);
        return it == params.end() ? dflt : it->second;
    };

    if (name == "gaussian") {
        const double a = get("a"), x0 = get("x0"), sigma = get("sigma");
        if (!(sigma > 0.0)) throw std::invalid_argument("gaussian ic: sigma must be > 0");
        return Field::from_function(grid, [&](double x) {
            const double s = (x - x0) / sigma;
            return a * std::exp(-s * s);
        });
    }
    if (name == "sine") {
        const double a = get("a"), k = get("k");
        return Field::from_function(grid, [&](double x) { return a * std::sin(k * x); });
    }
    if (name == "riemann_tanh") {
        const double ul = get("ul"), ur = get("ur"), x0 = get("x0"), delta = get("delta");
        if (!(delta > 0.0)) throw std::invalid_argument("riemann_tanh ic: delta must be > 0");
        const double width = grid.width();
        const double ramp_x0 = get_or("ramp_x0", x0 + 0.5 * width);
        const double ramp_delta = get_or("ramp_delta", width / 20.0);
        if (!(ramp_delta > 0.0))
            throw std::invalid_argument("riemann_tanh ic: ramp_delta must be > 0");
        // jump ul -> ur at x0, return ramp ur -> ul at ramp_x0; both ends sit at ul
        return Field::from_function(grid, [&](double x) {
            const double jump = 0.5 * (1.0 - std::tanh((x - x0) / delta));
            const double ramp = 0.5 * (1.0 + std::tanh((x - ramp_x0) / ramp_delta));
            return ur + (ul - ur) * (jump + ramp);
        });
    }
    if (name == "bump_slope") {
        const double m = get("m"), width = get("width"), x0 = get("x0");
        if (!(m > 0.0)) throw std::invalid_argument("bump_slope ic: m must be > 0");
        if (!(width > 0.0)) throw std::invalid_argument("bump_slope ic: width must be > 0");
        // (1-s^2)^2 has max slope 8/(3 sqrt 3) at s = 1/sqrt 3; scale so max u' = m
        const double a = m * width * 3.0 * std::sqrt(3.0) / 8.0;
        return Field::from_function(grid, [&](double x) {
            const double s = (x - x0) / width;
            if (std::abs(s) >= 1.0) return 0.0;
            const double w = 1.0 - s * s;
            return a * w * w;
        });
    }
    throw std::invalid_argument("unknown ic: " + name);
}

Field build_initial(const ScenarioConfig& config) {
    return builtin_ic(config.ic_name, config.ic_params, config.make_grid());
}

}  // namespace rscl
