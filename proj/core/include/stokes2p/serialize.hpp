#pragma once

#include "stokes2p/field.hpp"

#include <string>

namespace stokes2p {

/// Writes `f` as `<base>.bin` (row-major complex128 pairs, little endian,
/// plus block then minus block) and `<base>.json` (shape header).
void save_field(const TwoPhaseField& f, const std::string& base);

/// Reads a field written by save_field.
TwoPhaseField load_field(const std::string& base);

} // namespace stokes2p
