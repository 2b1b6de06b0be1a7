#include <iostream>

#include "affsch/cli.hpp"

int main(int argc, char** argv) {
  return affsch::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
