#include <iostream>

#include "lagrel/cli.hpp"

int main(int argc, char** argv) {
  return lagrel::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
