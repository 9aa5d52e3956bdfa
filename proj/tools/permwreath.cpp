#include <iostream>
#include <string>
#include <vector>

#include "permwreath/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto r = permwreath::cli::execute(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
