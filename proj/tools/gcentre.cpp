#include <iostream>

#include <gcentre/cli.hpp>

int main(int argc, char** argv) {
  return gcentre::cli::run(argc, argv, std::cout, std::cerr);
}
