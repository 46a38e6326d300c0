#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include "qscale/report.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  qscale::cli::RunOptions options;
  const char* color = std::getenv("QRM_COLOR");
  options.color = isatty(STDOUT_FILENO) && !(color && std::string_view(color) == "0");
  return qscale::cli::run(args, std::cout, std::cerr, options);
}
