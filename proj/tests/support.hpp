#pragma once

// Shared test helpers: fixture loading and small builders.

#include <fstream>
#include <sstream>
#include <string>

#include "quivergp/path_algebra.hpp"

namespace qgp_test {

inline std::string read_fixture(const std::string& name) {
  const std::string path = std::string(QGP_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline qgp::AlgebraPtr load_algebra(const std::string& name) {
  return qgp::algebra_from_json(read_fixture(name));
}

}  // namespace qgp_test
