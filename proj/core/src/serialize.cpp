#include "stokes2p/serialize.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <fstream>

namespace stokes2p {

namespace {
void require_little_endian() {
    static_assert(std::endian::native == std::endian::little,
                  "field files are defined little endian; big endian hosts are unsupported");
}
} // namespace

void save_field(const TwoPhaseField& f, const std::string& base) {
    require_little_endian();
    nlohmann::json header;
    header["format"] = "stokes2p-field-v1";
    header["dtype"] = "complex128";
    header["byte_order"] = "little";
    header["layout"] = "plus block then minus block; each [component][tangential][normal], "
                       "normal fastest; complex stored as re,im pairs";
    header["dim"] = f.grid.dim;
    header["tang_modes"] = f.grid.tang_modes;
    header["tang_period"] = f.grid.tang_period;
    header["half_height"] = f.grid.half_height;
    header["normal_cells"] = f.grid.normal_cells;
    header["ncomp"] = f.ncomp;
    header["tang_space"] = f.space == TangSpace::physical ? "physical" : "spectral";
    header["shape"] = {2, f.ncomp, f.grid.tang_count(), f.grid.half_count()};
    {
        std::ofstream js(base + ".json");
        if (!js) throw std::runtime_error("cannot open " + base + ".json for writing");
        js << header.dump(2) << "\n";
    }
    std::ofstream bin(base + ".bin", std::ios::binary);
    if (!bin) throw std::runtime_error("cannot open " + base + ".bin for writing");
    auto dump = [&](const std::vector<cd>& v) {
        bin.write(reinterpret_cast<const char*>(v.data()),
                  static_cast<std::streamsize>(v.size() * sizeof(cd)));
    };
    dump(f.plus_vals);
    dump(f.minus_vals);
    if (!bin) throw std::runtime_error("write failure on " + base + ".bin");
}

TwoPhaseField load_field(const std::string& base) {
    require_little_endian();
    nlohmann::json header;
    {
        std::ifstream js(base + ".json");
        if (!js) throw std::runtime_error("cannot open " + base + ".json");
        js >> header;
    }
    if (header.at("format") != "stokes2p-field-v1")
        throw std::runtime_error("unsupported field file format in " + base + ".json");
    PeriodicGrid g;
    g.dim = header.at("dim").get<int>();
    g.tang_modes = header.at("tang_modes").get<int>();
    g.tang_period = header.at("tang_period").get<double>();
    g.half_height = header.at("half_height").get<double>();
    g.normal_cells = header.at("normal_cells").get<int>();
    validate(g);
    const int ncomp = header.at("ncomp").get<int>();
    const auto space = header.at("tang_space").get<std::string>() == "physical"
                           ? TangSpace::physical
                           : TangSpace::spectral;
    TwoPhaseField f = TwoPhaseField::zero(g, ncomp, space);
    std::ifstream bin(base + ".bin", std::ios::binary);
    if (!bin) throw std::runtime_error("cannot open " + base + ".bin");
    auto slurp = [&](std::vector<cd>& v) {
        bin.read(reinterpret_cast<char*>(v.data()),
                 static_cast<std::streamsize>(v.size() * sizeof(cd)));
    };
    slurp(f.plus_vals);
    slurp(f.minus_vals);
    if (!bin) throw std::runtime_error("truncated field file " + base + ".bin");
    return f;
}

} // namespace stokes2p
