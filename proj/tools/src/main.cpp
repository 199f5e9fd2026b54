#include <iostream>

#include "zpdcli/app.hpp"

int main(int argc, char** argv) { return zpdcli::run(argc, argv, std::cout, std::cerr); }
