#include <iostream>
#include <string>
#include <vector>

#include "forbconf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return forbconf::run_cli(args, std::cout, std::cerr);
}
