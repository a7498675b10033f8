#include <iostream>

#include "tanglelink/cli.hpp"

int main(int argc, char** argv) {
  return tanglelink::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
