#include <string>
#include <vector>

#include "diracsl2/cli.hpp"

int main(int argc, char** argv) {
  return diracsl2::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
