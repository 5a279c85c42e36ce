#pragma once

#include "atoms.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_algorithms.hpp"
#include "graph_io.hpp"
#include "interval.hpp"
#include "numbers.hpp"
#include "oracle.hpp"
#include "twins.hpp"
#include "vertex_set.hpp"
#include "wtc.hpp"
