#include "stokes2p/config.hpp"

#include <fstream>

namespace stokes2p {

Section::Section(const nlohmann::json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object())
        throw ConfigError(path_ + ": expected a JSON object, got " + std::string(j_.type_name()));
}

const nlohmann::json& Section::fetch(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end()) throw ConfigError(at(key) + ": required field is missing");
    used_.insert(key);
    return *it;
}

Section Section::child(const std::string& key) { return Section(fetch(key), at(key)); }

std::optional<Section> Section::child_opt(const std::string& key) {
    if (!j_.contains(key)) return std::nullopt;
    return Section(fetch(key), at(key));
}

double Section::num(const std::string& key) {
    const auto& v = fetch(key);
    if (!v.is_number()) throw ConfigError(at(key) + ": expected a number");
    return v.get<double>();
}

double Section::num(const std::string& key, double dflt) {
    return j_.contains(key) ? num(key) : dflt;
}

int Section::integer(const std::string& key) {
    const auto& v = fetch(key);
    if (!v.is_number_integer()) throw ConfigError(at(key) + ": expected an integer");
    return v.get<int>();
}

int Section::integer(const std::string& key, int dflt) {
    return j_.contains(key) ? integer(key) : dflt;
}

uint64_t Section::u64(const std::string& key, uint64_t dflt) {
    if (!j_.contains(key)) return dflt;
    const auto& v = fetch(key);
    if (!v.is_number_unsigned() && !v.is_number_integer())
        throw ConfigError(at(key) + ": expected a nonnegative integer");
    const auto sv = v.get<int64_t>();
    if (v.is_number_integer() && sv < 0)
        throw ConfigError(at(key) + ": expected a nonnegative integer");
    return v.get<uint64_t>();
}

bool Section::flag(const std::string& key, bool dflt) {
    if (!j_.contains(key)) return dflt;
    const auto& v = fetch(key);
    if (!v.is_boolean()) throw ConfigError(at(key) + ": expected a boolean");
    return v.get<bool>();
}

std::string Section::str(const std::string& key) {
    const auto& v = fetch(key);
    if (!v.is_string()) throw ConfigError(at(key) + ": expected a string");
    return v.get<std::string>();
}

std::string Section::str(const std::string& key, const std::string& dflt) {
    return j_.contains(key) ? str(key) : dflt;
}

std::vector<double> Section::num_array(const std::string& key) {
    const auto& v = fetch(key);
    if (!v.is_array()) throw ConfigError(at(key) + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number()) throw ConfigError(at(key) + ": expected an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

void Section::done() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
        if (!used_.contains(it.key()))
            throw ConfigError(at(it.key()) + ": unknown configuration key");
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    try {
        nlohmann::json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
}

PeriodicGrid parse_grid(Section& s, int default_dim) {
    const int dim = s.integer("dim", default_dim);
    if (dim != 2 && dim != 3)
        throw ConfigError(s.path() + ".dim: must be 2 or 3");
    PeriodicGrid d = default_grid(dim);
    PeriodicGrid g;
    g.dim = dim;
    g.tang_modes = s.integer("tang_modes", d.tang_modes);
    g.tang_period = s.num("tang_period", d.tang_period);
    g.half_height = s.num("half_height", d.half_height);
    g.normal_cells = s.integer("normal_cells", d.normal_cells);
    s.done();
    validate(g);
    return g;
}

FluidParams parse_fluids(Section& s) {
    FluidParams p;
    p.rho_plus = s.num("rho_plus", 1.0);
    p.rho_minus = s.num("rho_minus", 1.0);
    p.mu_plus = s.num("mu_plus", 1.0);
    p.mu_minus = s.num("mu_minus", 1.0);
    s.done();
    validate(p);
    return p;
}

cd parse_complex(Section& s) {
    const double re = s.num("re");
    const double im = s.num("im", 0.0);
    s.done();
    return cd{re, im};
}

} // namespace stokes2p
