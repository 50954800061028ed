#include <iostream>
#include <string>
#include <vector>

#include "ddlpb/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return ddlpb::cli::run(args, std::cout, std::cerr);
}
