// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.

#include <iostream>  // for cout, cerr

#include "numsg/cli.hpp"

int main(int argc, char** argv) {
  return numsg::cli::main_entry(argc, argv, std::cout, std::cerr);
}
