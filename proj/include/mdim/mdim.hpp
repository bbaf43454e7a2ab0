// mdim.hpp
// Umbrella header for the whole library.

#pragma once

#include "mdim/distance.hpp"
#include "mdim/family_spec.hpp"
#include "mdim/graph.hpp"
#include "mdim/graph6.hpp"
#include "mdim/json_io.hpp"
#include "mdim/resolving.hpp"
#include "mdim/solver.hpp"
#include "mdim/theorems.hpp"
