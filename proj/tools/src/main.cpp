#include <iostream>
#include <string>
#include <vector>

#include "cosecant_cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cosecant::cli::run(args, std::cout, std::cerr);
}
