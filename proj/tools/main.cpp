#include <iostream>
#include <string>
#include <vector>

#include "polarlp/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    std::cout << polarlp::cli::usage();
    return args.empty() ? polarlp::cli::kError : polarlp::cli::kOk;
  }
  return polarlp::cli::run(args, std::cin, std::cout, std::cerr);
}
