#include <iostream>

#include "ringlab/cli.hpp"

int main(int argc, char** argv) {
  return ringlab::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
