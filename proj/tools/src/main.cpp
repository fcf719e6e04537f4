#include <iostream>

#include "leghopf_app/cli.hpp"

int main(int argc, char** argv) { return leghopf::app::run(argc, argv, std::cout, std::cerr); }
