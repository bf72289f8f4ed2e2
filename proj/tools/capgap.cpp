#include <iostream>

#include "capgap/cli.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  capgap::CommandOutcome outcome = capgap::run(args);
  std::cout << outcome.output;
  std::cerr << outcome.error;
  return outcome.exit_code;
}
