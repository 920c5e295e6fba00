#pragma once

#include "tmatch/bench.hpp"
#include "tmatch/error.hpp"
#include "tmatch/generator.hpp"
#include "tmatch/mwis.hpp"
#include "tmatch/overlap_graph.hpp"
#include "tmatch/reduction.hpp"
#include "tmatch/rng.hpp"
#include "tmatch/solver.hpp"
#include "tmatch/static_graph.hpp"
#include "tmatch/temporal_graph.hpp"
#include "tmatch/timed_matching.hpp"
#include "tmatch/tree_decomposition.hpp"
