#pragma once

#include <fstream>
#include <sstream>
#include <string>

namespace msrlab::testing {

inline std::string golden_path(const std::string& name) { return std::string(MSRLAB_GOLDEN_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline constexpr const char* kCase2Golden = "case2_n7_k3_d4_q13_seed1.json";

}  // namespace msrlab::testing
