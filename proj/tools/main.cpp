#include <exception>
#include <iostream>

#include "mnt/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  try {
    return mnt::cli::run(argc, argv, std::cin, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "mntool: internal error: " << e.what() << '\n';
    return 3;
  }
}
