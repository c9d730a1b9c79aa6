#include <iostream>
#include <string>
#include <vector>

#include "homacm/query.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homacm::main_entry(args, std::cout, std::cerr);
}
