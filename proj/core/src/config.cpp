#include "mfg/config.hpp"

#include <cstddef>
#include <fstream>
#include <sstream>
#include <vector>

#include "mfg/errors.hpp"

namespace mfg {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, const std::string& where) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError(where + ": expected a number, got '" + value + "'");
    }
    if (pos != value.size())
        throw ConfigError(where + ": trailing characters in number '" + value + "'");
    return v;
}

long parse_int(const std::string& value, const std::string& where) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError(where + ": expected an integer, got '" + value + "'");
    }
    if (pos != value.size())
        throw ConfigError(where + ": trailing characters in integer '" + value + "'");
    return v;
}

std::vector<double> parse_list(const std::string& value, const std::string& where) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError(where + ": empty list entry");
        out.push_back(parse_double(item, where));
    }
    if (out.empty()) throw ConfigError(where + ": empty list");
    return out;
}

Profile parse_profile(const std::string& value, const std::string& key,
                      const std::string& where) {
    if (value == "quartic-bump") return Profile::quartic_bump();
    if (value == "sine-squared") return Profile::sine_squared();
    if (value == "zero") return Profile::zero();
    if (value.rfind("file:", 0) == 0) {
        const std::string path = value.substr(5);
        std::ifstream in(path);
        if (!in) throw ConfigError(where + ": cannot open profile file '" + path + "'");
        std::vector<double> samples;
        double v;
        while (in >> v) samples.push_back(v);
        if (!in.eof()) throw ConfigError(where + ": malformed number in '" + path + "'");
        return Profile::from_samples(std::move(samples), key + ":" + path);
    }
    throw ConfigError(where + ": unknown profile '" + value +
                      "' (expected quartic-bump, sine-squared, zero or file:PATH)");
}

} // namespace

Config parse_config(const std::string& text, const std::string& origin) {
    Config cfg;
    std::string section;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = origin + ":" + std::to_string(lineno);

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "model" && section != "discretization")
                throw ConfigError(where + ": unknown section [" + section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(where + ": empty key or value");
        if (section.empty())
            throw ConfigError(where + ": key '" + key + "' outside any section");

        if (section == "model") {
            if (key == "epsilon") cfg.params.epsilon = parse_double(value, where);
            else if (key == "sigma") cfg.params.sigma = parse_double(value, where);
            else if (key == "r") cfg.params.r = parse_double(value, where);
            else if (key == "L") cfg.params.L = parse_double(value, where);
            else if (key == "T") cfg.params.T = parse_double(value, where);
            else if (key == "m0") cfg.params.m0 = parse_profile(value, key, where);
            else if (key == "uT") cfg.params.uT = parse_profile(value, key, where);
            else throw ConfigError(where + ": unknown key '" + key + "' in [model]");
        } else {
            if (key == "nx") cfg.disc.nx = static_cast<std::size_t>(parse_int(value, where));
            else if (key == "nt") cfg.disc.nt = static_cast<std::size_t>(parse_int(value, where));
            else if (key == "theta") cfg.disc.theta = parse_double(value, where);
            else if (key == "newton_tol") cfg.disc.newton_tol = parse_double(value, where);
            else if (key == "newton_max") cfg.disc.newton_max = static_cast<int>(parse_int(value, where));
            else if (key == "picard_tol") cfg.disc.picard_tol = parse_double(value, where);
            else if (key == "picard_max") cfg.disc.picard_max = static_cast<int>(parse_int(value, where));
            else if (key == "continuation") cfg.disc.continuation = parse_list(value, where);
            else throw ConfigError(where + ": unknown key '" + key + "' in [discretization]");
        }
    }

    validate(cfg.params);
    validate(cfg.disc);
    const Grid grid = build_grid(cfg.params, cfg.disc);
    initial_density(cfg.params, grid); // validates the sampled profile
    terminal_value(cfg.params, grid);
    return cfg;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.string());
}

} // namespace mfg
