#include <iostream>
#include <string>
#include <vector>

#include "gridhfk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gridhfk::run(args, std::cout, std::cerr);
}
