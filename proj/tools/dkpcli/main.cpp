#include <exception>
#include <iostream>

#include "dkpcli/commands.hpp"

int main(int argc, char** argv) {
  try {
    return dkp::cli::run(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    // library preconditions surfacing through a command are input errors
    std::cerr << "dkp: " << e.what() << "\n";
    return dkp::cli::kExitUsage;
  }
}
