#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  auto parsed = addcomb::cli::parse_args(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return addcomb::cli::run(*parsed.config, std::cout, std::cerr);
}
