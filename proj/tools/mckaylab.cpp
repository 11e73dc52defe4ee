#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv, argv + argc);
  return mckaylab::cli::run(args, std::cout, std::cerr);
}
