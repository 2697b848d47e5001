#include <iostream>

#include "wfa/cli.hpp"

int main(int argc, char** argv) {
  return wfa::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
