#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_cap;
  if (const char* v = std::getenv("SEMILAT_CAP")) env_cap = v;
  return semilat::cli::main_entry(args, env_cap, std::cout, std::cerr);
}
