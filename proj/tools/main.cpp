#include <iostream>
#include <vector>

#include "agt/cli.hpp"

int main(int argc, char** argv) {
  return agt::run_cli(std::vector<std::string>(argv + 1, argv + argc),
                      std::cout, std::cerr);
}
