#pragma once

#include "eulercalc/core/error.hpp"
#include "eulercalc/core/integer.hpp"
#include "eulercalc/core/simplex.hpp"
#include "eulercalc/core/complex.hpp"
#include "eulercalc/core/cell_set.hpp"
#include "eulercalc/core/simplicial_map.hpp"
#include "eulercalc/core/subdivision.hpp"
#include "eulercalc/core/product.hpp"
#include "eulercalc/calculus/function.hpp"
#include "eulercalc/calculus/operations.hpp"
#include "eulercalc/calculus/nearby.hpp"
#include "eulercalc/calculus/cech.hpp"
#include "eulercalc/traces/group_action.hpp"
#include "eulercalc/traces/traces.hpp"
#include "eulercalc/models/registry.hpp"
#include "eulercalc/models/library.hpp"
#include "eulercalc/models/verify.hpp"
