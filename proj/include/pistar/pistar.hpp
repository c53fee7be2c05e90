// pistar - exact computation in finite partition semigroups
//
// Includes every module.

#ifndef PISTAR_PISTAR_HPP_
#define PISTAR_PISTAR_HPP_

#include "bipartition.hpp"  // IWYU pragma: export
#include "checks.hpp"       // IWYU pragma: export
#include "congruence.hpp"   // IWYU pragma: export
#include "enumerate.hpp"    // IWYU pragma: export
#include "error.hpp"        // IWYU pragma: export
#include "generation.hpp"   // IWYU pragma: export
#include "green.hpp"        // IWYU pragma: export
#include "groups.hpp"       // IWYU pragma: export
#include "io.hpp"           // IWYU pragma: export
#include "isolated.hpp"     // IWYU pragma: export
#include "morphisms.hpp"    // IWYU pragma: export
#include "named.hpp"        // IWYU pragma: export
#include "product.hpp"      // IWYU pragma: export
#include "universe.hpp"     // IWYU pragma: export
#include "verdict.hpp"      // IWYU pragma: export

#endif  // PISTAR_PISTAR_HPP_
