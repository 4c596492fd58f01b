#include <iostream>

#include "picgram/cli.hpp"

int main(int argc, char** argv) {
  return picgram::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
