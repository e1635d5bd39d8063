#ifndef COARSEPATH_DOMINATION_HPP
#define COARSEPATH_DOMINATION_HPP

#include <utility>
#include <vector>

#include "coarsepath/graph.hpp"
#include "coarsepath/layering.hpp"

namespace coarsepath {

// Max over v of d_G(v, path). Throws NotAPath.
int path_eccentricity(const Graph& g, const std::vector<int>& path);

// Throws NotAPath / NotShortestPath.
void require_shortest_path(const Graph& g, const std::vector<int>& path);

// Every x-y path meets the radius-k disks of x and y, phrased through the
// separation test: each w outside both disks has D(w,k) separating x from y.
bool is_k_dominating_pair(const Graph& g, int x, int y, int k);

struct DominatingPair {
    int k = 0;
    std::pair<int, int> pair{-1, -1};  // {-1,-1} on the one-vertex graph
};

// Minimum k admitting a k-dominating pair; k ascending, pairs lexicographic.
DominatingPair dpr(const Graph& g);

struct DominatingPath {
    int k = 0;
    std::vector<int> path;
};

// Minimum eccentricity over all shortest paths, enumerated through
// predecessor structures. Throws TooManyPaths past the global cap.
DominatingPath exact_dsp(const Graph& g, long long path_cap = 1000000);

// BFS geodesics from the starts whose extended layering attains the layering
// length minimum; upper bound only, never below exact_dsp.
DominatingPath heuristic_dsp(const Graph& g);

// Spine = path, off-path vertices attached to a nearest path vertex (earliest
// along the path on ties); distortion at most 2*path_eccentricity + 2.
// Throws NotShortestPath.
Caterpillar caterpillar_from_dominating_path(const Graph& g,
                                             const std::vector<int>& path);

}  // namespace coarsepath

#endif
