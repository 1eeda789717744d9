#pragma once

#include <fstream>
#include <iomanip>
#include <string>
#include <vector>

namespace stokes2p {

/// Minimal CSV writer for report tables.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path) : out_(path) {
        if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
        out_ << std::setprecision(17);
    }

    void header(const std::vector<std::string>& cols) { row_strings(cols); }

    void row_strings(const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
        out_ << "\n";
    }

    template <typename... Ts>
    void row(const Ts&... cells) {
        bool first = true;
        ((out_ << (first ? "" : ","), out_ << cells, first = false), ...);
        out_ << "\n";
    }

  private:
    std::ofstream out_;
};

} // namespace stokes2p
