#pragma once

#include <spdlog/spdlog.h>

namespace stokes2p {

/// Returns the library-wide logger. On first use the level is taken from the
/// STOKES2P_LOG environment variable (error, info, debug; default error).
std::shared_ptr<spdlog::logger> log();

} // namespace stokes2p
