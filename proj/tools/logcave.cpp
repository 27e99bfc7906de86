#include "logcave/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return logcave::cli::run(args, std::cin, std::cout, std::cerr);
}
