#include "cli_app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return e1am::cli::main_entry({argv, argv + argc}, std::cout, std::cerr);
}
