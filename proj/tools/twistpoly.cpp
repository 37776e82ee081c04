#include <iostream>

#include "twistpoly/version.hpp"

int main() {
  std::cout << twistpoly::tool_name << " " << twistpoly::tool_version << "\n";
  return 0;
}
