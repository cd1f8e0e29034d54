#include <iostream>

#include "micz/cli/cli.hpp"

int main(int argc, char** argv) {
  return micz::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
