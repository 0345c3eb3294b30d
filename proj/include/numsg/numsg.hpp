// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.
//
// Convenience header pulling in the whole library (the CLI front end in
// cli.hpp is not included).

#ifndef NUMSG_NUMSG_HPP_
#define NUMSG_NUMSG_HPP_

#include "class_expansion.hpp"     // IWYU pragma: export
#include "errors.hpp"              // IWYU pragma: export
#include "irreducible_tree.hpp"    // IWYU pragma: export
#include "kunz.hpp"                // IWYU pragma: export
#include "numerical_semigroup.hpp" // IWYU pragma: export
#include "oracle.hpp"              // IWYU pragma: export

#endif  // NUMSG_NUMSG_HPP_
