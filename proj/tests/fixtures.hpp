#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "argclinic/io/bundle.hpp"

namespace argclinic::fixture {

inline std::string data_path(const std::string& name) {
  return std::string(ARGCLINIC_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline io::GuidelineBundle load_bundle(const std::string& name) {
  return io::parse_bundle(read_data(name));
}

}  // namespace argclinic::fixture
