#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tltt/corpus/corpus.hpp"

namespace tltt::fixtures {

inline const std::filesystem::path kRoot = TLTT_SOURCE_DIR;

inline std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const char* dir : {"prelude", "tests/pass", "tests/fail"}) {
    auto fs = corpus::tltt_files(kRoot / dir);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

inline Environment prelude_env() {
  Environment env;
  for (const auto& f : corpus::tltt_files(kRoot / "prelude")) env = corpus::check_file(f, env, {}).env;
  return env;
}

inline ModuleReport check_text(const std::string& source, KernelOptions kernel = {}) {
  ModuleChecker checker(prelude_env(), CheckOptions{kernel, false});
  return checker.check_source("<test>", source);
}

}  // namespace tltt::fixtures
