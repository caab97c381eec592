#include <iostream>

#include "qgame/cli.h"

int main(int argc, char** argv) {
  return qgame::cli::run(argc, argv, std::cout, std::cerr);
}
