#include "stokes2p/log.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>

#include <cstdlib>
#include <mutex>
#include <string>

namespace stokes2p {

std::shared_ptr<spdlog::logger> log() {
    static std::shared_ptr<spdlog::logger> logger = [] {
        auto lg = spdlog::stderr_color_mt("stokes2p");
        spdlog::level::level_enum level = spdlog::level::err;
        if (const char* env = std::getenv("STOKES2P_LOG")) {
            std::string v{env};
            if (v == "debug")
                level = spdlog::level::debug;
            else if (v == "info")
                level = spdlog::level::info;
            else if (v == "error")
                level = spdlog::level::err;
            else
                lg->warn("unrecognized STOKES2P_LOG value '{}', using 'error'", v);
        }
        lg->set_level(level);
        return lg;
    }();
    return logger;
}

} // namespace stokes2p
