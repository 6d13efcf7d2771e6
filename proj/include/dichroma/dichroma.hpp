#pragma once

// Umbrella header for the whole library.

#include "dichroma/cyclic_order.hpp"
#include "dichroma/degeneracy.hpp"
#include "dichroma/digraph.hpp"
#include "dichroma/exact.hpp"
#include "dichroma/experiments.hpp"
#include "dichroma/generators.hpp"
#include "dichroma/heuristics.hpp"
#include "dichroma/rng.hpp"
#include "dichroma/structure.hpp"
