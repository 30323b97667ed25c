#include <iostream>
#include <string>
#include <vector>

#include "ewlink/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ewlink::cli::dispatch(args, std::cout, std::cerr);
}
