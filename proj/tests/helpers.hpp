#pragma once

#include "torbar/parser.hpp"
#include "torbar/presentation.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

namespace torbar::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::shared_ptr<const AlgebraContext> load_algebra(const std::string& name) {
  std::string text = read_file(std::string(TORBAR_DATA_DIR) + "/" + name);
  return std::make_shared<AlgebraContext>(parse_presentation(text));
}

}  // namespace torbar::testing
