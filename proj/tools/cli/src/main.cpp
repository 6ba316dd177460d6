#include <iostream>
#include <string>
#include <vector>

#include "vvmf_cli/app.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return vvmf::cli::run(args, std::cin, std::cout, std::cerr);
}
