#pragma once

#include "stokes2p/grid.hpp"
#include "stokes2p/params.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace stokes2p {

/// Strict accessor for one JSON object level. Every key that is read is
/// recorded; `done()` then rejects any key that was never consumed, so
/// misspelled or misplaced configuration fields fail loudly with their path.
class Section {
  public:
    Section(const nlohmann::json& j, std::string path);

    bool has(const std::string& key) const { return j_.contains(key); }

    Section child(const std::string& key);
    std::optional<Section> child_opt(const std::string& key);

    double num(const std::string& key);
    double num(const std::string& key, double dflt);
    int integer(const std::string& key);
    int integer(const std::string& key, int dflt);
    uint64_t u64(const std::string& key, uint64_t dflt);
    bool flag(const std::string& key, bool dflt);
    std::string str(const std::string& key);
    std::string str(const std::string& key, const std::string& dflt);
    std::vector<double> num_array(const std::string& key);

    /// Throws ConfigError on the first key present in the object but never read.
    void done() const;

    const std::string& path() const { return path_; }

  private:
    const nlohmann::json& fetch(const std::string& key);
    std::string at(const std::string& key) const { return path_ + "." + key; }

    const nlohmann::json& j_;
    std::string path_;
    std::set<std::string> used_;
};

/// Parses a JSON file; throws ConfigError with the parser message on failure.
nlohmann::json load_json_file(const std::string& path);

/// Common configuration blocks.
PeriodicGrid parse_grid(Section& s, int default_dim = 2);
FluidParams parse_fluids(Section& s);
cd parse_complex(Section& s);

} // namespace stokes2p
