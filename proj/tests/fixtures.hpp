#pragma once

#include "oddbic/graph.hpp"

namespace fixture {

using oddbic::Graph;

// Triangles {0,1,2} and {4,5,6} joined by the path 2-3-4.
inline Graph theta7() { return Graph(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}}); }

// Triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
inline Graph dumbbell() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}}); }

// Triangles {0,1,2} and {2,3,4} sharing vertex 2.
inline Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

// Triangle 0-1-2 plus the ear 0-3-4-1.
inline Graph fused5() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {1, 4}}); }

inline Graph two_triangles() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

// K4 minus the edge 0-2.
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace fixture
