#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftx::testing {

inline std::string root_corpus_path() { return std::string(FTX_CORPUS_DIR) + "/root.txt"; }
inline std::string numexpr_corpus_path() { return std::string(FTX_CORPUS_DIR) + "/numexpr.txt"; }

// One expression per line; blank lines and lines starting with '#' are skipped.
inline std::vector<std::string> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus " + path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace ftx::testing
