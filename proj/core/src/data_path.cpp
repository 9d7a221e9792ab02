#include "verikit/data_path.hpp"

#include <cstdlib>
#include <filesystem>

#include "verikit/errors.hpp"

#ifndef VERIKIT_DATA_DIR
#define VERIKIT_DATA_DIR ""
#endif

namespace verikit {

std::string data_file(const std::string& name) {
  namespace fs = std::filesystem;
  if (const char* env = std::getenv("VERIKIT_DATA")) {
    fs::path p = fs::path(env) / name;
    if (fs::exists(p)) return p.string();
  }
  fs::path built = fs::path(VERIKIT_DATA_DIR) / name;
  if (!std::string(VERIKIT_DATA_DIR).empty() && fs::exists(built))
    return built.string();
  fs::path local = fs::path("core/data") / name;
  if (fs::exists(local)) return local.string();
  throw DataFileMissing("data file not found: " + name +
                        " (set VERIKIT_DATA)");
}

}  // namespace verikit
