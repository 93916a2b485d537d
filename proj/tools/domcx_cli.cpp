#include <cstdio>

#include "domcx/surface.hpp"

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::printf("domcx cli placeholder\n");
  return 0;
}
