#pragma once

#include <string>

namespace verikit {

// Resolves a shipped data file: $VERIKIT_DATA first, then the build-time
// source location.  Throws DataFileMissing when nothing matches.
std::string data_file(const std::string& name);

}  // namespace verikit
