#pragma once

#include "mcover/graph.hpp"

namespace mcover {

// Small standard graphs used as construction inputs and test fixtures.

Graph complete_graph(int n);
// Parts {0..a-1} and {a..a+b-1}; edge (i, a+j) at position i*b + j.
Graph complete_bipartite(int a, int b);
// 0-1-...-(n-1)-0, edge i joins i and i+1 (mod n).
Graph cycle_graph(int n);
Graph path_graph(int n);
// d-dimensional hypercube.
Graph hypercube(int d);
// Outer C5 0-1-2-3-4, inner pentagram 5-7-9-6-8, spokes i -- i+5.
Graph petersen();

}  // namespace mcover
