#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> seed;
  if (const char* env = std::getenv("NEUTRO_SEED")) seed = env;
  return neutro::cli::run(args, std::cout, std::cerr, seed);
}
