#ifndef RODIER_TESTS_RUN_COMMAND_HPP
#define RODIER_TESTS_RUN_COMMAND_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rodier::testing {

struct CommandResult {
  int exit_code = -1;
  std::string out;  // stdout only; stderr is merged when `merge_stderr` is set
};

inline CommandResult run_command(const std::string& command, bool merge_stderr = false) {
  const std::string full = command + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + command);
  CommandResult r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace rodier::testing

#endif  // RODIER_TESTS_RUN_COMMAND_HPP
