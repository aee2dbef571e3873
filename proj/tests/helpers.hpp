#pragma once

#include <array>
#include <cstdio>
#include <memory>
#include <string>

inline std::string data_file(const std::string& name) {
  return std::string(QHH_DATA_DIR) + "/" + name;
}

struct CliResult {
  int exit_code;
  std::string out;
};

// Run the CLI binary, capturing stdout (stderr goes to the test log).
inline CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(QHH_CLI_PATH) + " " + args;
  std::array<char, 4096> buf{};
  CliResult res{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WEXITSTATUS(status);
  return res;
}
