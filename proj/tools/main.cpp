#include <iostream>

#include "cubicgray/cli.hpp"

int main(int argc, char** argv) {
  return cubicgray::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
