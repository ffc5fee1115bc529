#include <iostream>
#include <string>
#include <vector>

#include "contrapunctus/cli.hpp"

int main(int argc, char** argv) {
  return contrapunctus::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
