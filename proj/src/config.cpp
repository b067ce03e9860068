#include "floatbeam/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "floatbeam/errors.hpp"

namespace floatbeam {

namespace {

using KeyValues = std::map<std::string, std::map<std::string, std::string>>;

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

KeyValues parse_ini(const std::string& text) {
    KeyValues kv;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            kv[section];
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key = value");
        if (section.empty())
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": key outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kv[section].insert({key, value}).second)
            throw ConfigError("duplicate config key '" + section + "." + key + "'");
    }
    return kv;
}

std::string json_scalar_to_string(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", v.get<double>());
        return buf;
    }
    if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
    throw ConfigError("unsupported JSON value type in config");
}

KeyValues parse_json(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config JSON parse error: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config JSON root must be an object");
    KeyValues kv;
    for (const auto& [section, body] : root.items()) {
        if (!body.is_object())
            throw ConfigError("config section '" + section + "' must be an object");
        for (const auto& [key, value] : body.items()) {
            std::string text_value;
            if (value.is_array()) {
                std::string joined;
                for (const auto& el : value) {
                    if (!joined.empty()) joined += " ";
                    joined += json_scalar_to_string(el);
                }
                text_value = joined;
            } else {
                text_value = json_scalar_to_string(value);
            }
            kv[section][key] = text_value;
        }
    }
    return kv;
}

// Strict schema-driven reader over the section/key/value map.
class Reader {
public:
    explicit Reader(KeyValues kv) : kv_(std::move(kv)) {}

    bool has(const std::string& section, const std::string& key) {
        mark(section, key);
        auto s = kv_.find(section);
        return s != kv_.end() && s->second.count(key) > 0;
    }

    std::string required(const std::string& section, const std::string& key) {
        mark(section, key);
        auto s = kv_.find(section);
        if (s == kv_.end() || s->second.find(key) == s->second.end())
            throw ConfigError("missing config key '" + section + "." + key + "'");
        return s->second.at(key);
    }

    std::string optional(const std::string& section, const std::string& key,
                         const std::string& fallback) {
        if (!has(section, key)) return fallback;
        return kv_.at(section).at(key);
    }

    double number(const std::string& section, const std::string& key) {
        return to_number(required(section, key), section + "." + key);
    }

    double number_or(const std::string& section, const std::string& key,
                     double fallback) {
        if (!has(section, key)) return fallback;
        return to_number(kv_.at(section).at(key), section + "." + key);
    }

    long integer(const std::string& section, const std::string& key) {
        return to_integer(required(section, key), section + "." + key);
    }

    long integer_or(const std::string& section, const std::string& key,
                    long fallback) {
        if (!has(section, key)) return fallback;
        return to_integer(kv_.at(section).at(key), section + "." + key);
    }

    // Every present section/key must have been touched by the schema.
    void reject_unknown() const {
        for (const auto& [section, body] : kv_) {
            if (!touched_sections_.count(section))
                throw ConfigError("unknown config section '" + section + "'");
            for (const auto& [key, value] : body) {
                if (!touched_.count(section + "." + key))
                    throw ConfigError("unknown config key '" + section + "." +
                                      key + "'");
            }
        }
    }

    static double to_number(const std::string& text, const std::string& where) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(text, &pos);
            if (trim(text.substr(pos)).empty()) return v;
        } catch (...) {
        }
        throw ConfigError("config key '" + where + "': not a number: '" + text + "'");
    }

    static long to_integer(const std::string& text, const std::string& where) {
        try {
            std::size_t pos = 0;
            const long v = std::stol(text, &pos);
            if (trim(text.substr(pos)).empty()) return v;
        } catch (...) {
        }
        throw ConfigError("config key '" + where + "': not an integer: '" + text + "'");
    }

private:
    void mark(const std::string& section, const std::string& key) {
        touched_sections_.insert(section);
        touched_.insert(section + "." + key);
    }

    KeyValues kv_;
    std::set<std::string> touched_sections_;
    std::set<std::string> touched_;
};

std::vector<double> split_numbers(const std::string& text,
                                  const std::string& where) {
    std::vector<double> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) out.push_back(Reader::to_number(tok, where));
    return out;
}

Eigen::Vector3d parse_vec3(const std::string& text, const std::string& where) {
    const auto v = split_numbers(text, where);
    if (v.size() != 3)
        throw ConfigError("config key '" + where + "': expected 3 numbers");
    return Eigen::Vector3d(v[0], v[1], v[2]);
}

// "y:value, y:value, ..." pairs for tabulated beam coefficients.
BeamCoefficient parse_coeff_table(std::string text, const std::string& where) {
    for (char& c : text)
        if (c == ',') c = ' ';
    std::istringstream is(text);
    std::string tok;
    std::vector<std::pair<double, double>> pts;
    while (is >> tok) {
        const std::size_t colon = tok.find(':');
        if (colon == std::string::npos)
            throw ConfigError("config key '" + where + "': expected y:value pairs");
        pts.emplace_back(Reader::to_number(tok.substr(0, colon), where),
                         Reader::to_number(tok.substr(colon + 1), where));
    }
    if (pts.empty())
        throw ConfigError("config key '" + where + "': table is empty");
    try {
        return BeamCoefficient::table(std::move(pts));
    } catch (const AssemblyError& e) {
        throw ConfigError("config key '" + where + "': " + e.what());
    }
}

Signal parse_signal(const std::string& text, const std::string& where) {
    std::istringstream is(text);
    std::string kind;
    is >> kind;
    const auto num = [&](const char* what) {
        std::string tok;
        if (!(is >> tok))
            throw ConfigError("config key '" + where + "': " + kind +
                              " needs " + what);
        return Reader::to_number(tok, where);
    };
    if (kind == "zero" || kind.empty()) return Signal::zero();
    if (kind == "sinusoid") {
        const double a = num("amplitude, angular frequency, phase");
        const double w = num("angular frequency");
        const double p = num("phase");
        return Signal::sinusoid(a, w, p);
    }
    if (kind == "ramp") {
        const double rate = num("rate and end time");
        const double tend = num("end time");
        return Signal::ramp(rate, tend);
    }
    if (kind == "table") {
        std::vector<std::pair<double, double>> pts;
        std::string tok;
        std::vector<double> flat;
        while (is >> tok) flat.push_back(Reader::to_number(tok, where));
        if (flat.empty() || flat.size() % 2 != 0)
            throw ConfigError("config key '" + where +
                              "': table needs t f pairs");
        for (std::size_t i = 0; i < flat.size(); i += 2)
            pts.emplace_back(flat[i], flat[i + 1]);
        return Signal::from_table(std::move(pts));
    }
    throw ConfigError("config key '" + where + "': unknown forcing kind '" +
                      kind + "'");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    const bool is_json = first != std::string::npos && text[first] == '{';
    Reader r(is_json ? parse_json(text) : parse_ini(text));

    RunConfig cfg;
    cfg.depth_h = r.number("geometry", "depth_h");
    cfg.tank_halflength_Lx = r.number("geometry", "tank_halflength_Lx");
    cfg.hull_halfbeam_a = r.number("geometry", "hull_halfbeam_a");
    cfg.hull_draft_d = r.number("geometry", "hull_draft_d");
    cfg.y_G = r.number("geometry", "y_G");
    cfg.mesh_target_size = r.number("geometry", "mesh_target_size");

    cfg.mass_mp = r.number("platform", "mass_mp");
    cfg.inertia_Ip = r.number("platform", "inertia_Ip");
    cfg.rho_f = r.number("platform", "rho_f");
    cfg.gravity_g = r.number("platform", "gravity_g");
    cfg.mooring_surge_k = r.number("platform", "mooring_surge_k");

    cfg.beam_y0 = r.number("beam", "y0");
    cfg.beam_length = r.number("beam", "length_L");
    const bool has_rho = r.has("beam", "rho");
    const bool has_rho_table = r.has("beam", "rho_table");
    if (has_rho == has_rho_table)
        throw ConfigError(
            has_rho ? "config: give exactly one of 'beam.rho' and 'beam.rho_table'"
                    : "missing config key 'beam.rho'");
    cfg.beam_rho = has_rho
                       ? BeamCoefficient::constant(r.number("beam", "rho"))
                       : parse_coeff_table(r.required("beam", "rho_table"),
                                           "beam.rho_table");
    const bool has_ei = r.has("beam", "EI");
    const bool has_ei_table = r.has("beam", "EI_table");
    if (has_ei == has_ei_table)
        throw ConfigError(
            has_ei ? "config: give exactly one of 'beam.EI' and 'beam.EI_table'"
                   : "missing config key 'beam.EI'");
    cfg.beam_EI = has_ei ? BeamCoefficient::constant(r.number("beam", "EI"))
                         : parse_coeff_table(r.required("beam", "EI_table"),
                                             "beam.EI_table");
    cfg.tip_mass_m = r.number("beam", "tip_mass_m");
    cfg.tip_inertia_J = r.number("beam", "tip_inertia_J");
    cfg.n_elements = static_cast<int>(r.integer("beam", "n_elements"));

    static const char* kForcingKeys[] = {"F_ext1", "F_ext2", "F_ext3"};
    for (int i = 0; i < 3; ++i)
        cfg.forcing.f_ext[i] = parse_signal(
            r.optional("forcing", kForcingKeys[i], "zero"),
            std::string("forcing.") + kForcingKeys[i]);
    cfg.forcing.f_tip =
        parse_signal(r.optional("forcing", "F_tip", "zero"), "forcing.F_tip");
    cfg.forcing.m_tip =
        parse_signal(r.optional("forcing", "M_tip", "zero"), "forcing.M_tip");

    if (r.has("initial", "q0"))
        cfg.q0 = parse_vec3(r.required("initial", "q0"), "initial.q0");
    if (r.has("initial", "q1"))
        cfg.q1 = parse_vec3(r.required("initial", "q1"), "initial.q1");
    cfg.v0_mode = static_cast<int>(r.integer_or("initial", "v0_mode", 1));
    cfg.v0_amp = r.number_or("initial", "v0_amp", 0.0);
    cfg.v1_mode = static_cast<int>(r.integer_or("initial", "v1_mode", 1));
    cfg.v1_amp = r.number_or("initial", "v1_amp", 0.0);
    cfg.w0_tip = r.number_or("initial", "w0_tip", 0.0);
    cfg.w1_tip = r.number_or("initial", "w1_tip", 0.0);

    cfg.dt = r.number("numerics", "dt");
    cfg.T = r.number("numerics", "T");
    cfg.output_every = static_cast<int>(r.integer("numerics", "output_every"));
    cfg.solver_tol = r.number_or("numerics", "solver_tol", 1e-12);
    cfg.probe_x = r.number_or(
        "numerics", "probe_x",
        0.5 * (cfg.hull_halfbeam_a + cfg.tank_halflength_Lx));
    cfg.seed = static_cast<unsigned long>(
        r.integer_or("numerics", "seed", 20260810));

    cfg.out_dir = r.optional("output", "dir", "out");
    cfg.prefix = r.optional("output", "prefix", "run");

    r.reject_unknown();

    if (!(cfg.dt > 0.0)) throw ConfigError("config: numerics.dt must be positive");
    if (!(cfg.T > 0.0)) throw ConfigError("config: numerics.T must be positive");
    if (cfg.output_every < 1)
        throw ConfigError("config: numerics.output_every must be >= 1");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_config_text(buf.str());
}

FluidGeometry RunConfig::geometry() const {
    return build_geometry(depth_h, tank_halflength_Lx, hull_halfbeam_a,
                          hull_draft_d, y_G, mesh_target_size);
}

PlatformParams RunConfig::platform() const {
    PlatformParams p;
    p.mass_mp = mass_mp;
    p.inertia_Ip = inertia_Ip;
    p.y_G = y_G;
    p.rho_f = rho_f;
    p.gravity_g = gravity_g;
    p.mooring_surge_k = mooring_surge_k;
    return p;
}

BeamParams RunConfig::beam() const {
    BeamParams b;
    b.y0 = beam_y0;
    b.L = beam_length;
    b.rho = beam_rho;
    b.EI = beam_EI;
    b.tip_mass_m = tip_mass_m;
    b.tip_inertia_J = tip_inertia_J;
    b.n_elements = n_elements;
    return b;
}

}  // namespace floatbeam
