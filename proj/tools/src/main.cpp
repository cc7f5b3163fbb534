#include <cstdlib>
#include <iostream>

#include "polygauss_cli/app.hpp"
#include "polygauss_cli/config.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polygauss::cli::run(args, std::cout, std::cerr, std::getenv(polygauss::cli::kThreadsEnv));
}
