#include <iostream>
#include <string>
#include <vector>

#include "symchar/cli.hpp"

int main(int argc, char** argv) {
  return symchar::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
