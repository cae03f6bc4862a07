#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "ptsech_cli/run.hpp"

int main(int argc, char** argv) {
  try {
    return ptsech::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << '\n';
    return ptsech::cli::exit_numeric;
  }
}
