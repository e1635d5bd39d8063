#ifndef COARSEPATH_LAYERING_HPP
#define COARSEPATH_LAYERING_HPP

#include <vector>

#include "coarsepath/decomposition.hpp"
#include "coarsepath/graph.hpp"

namespace coarsepath {

struct Layering {
    int source = 0;
    std::vector<VertexSet> layers;  // layers[i] = vertices at distance i
    int length = 0;                 // max layer diameter in G (layers 1..q)
    int breadth = 0;                // min r covering each layer by one disk
};

Layering layering(const Graph& g, int s);

struct ExtendedLayering {
    PathDecomposition decomposition;  // bags L+_1..L+_q (single bag {s} if n=1)
    int length = 0;                   // Delta_s
    int breadth = 0;                  // rho_s
};

ExtendedLayering extended_layering(const Graph& g, int s);

struct BestExtendedLayering {
    int delta = 0;  // min_s Delta_s
    int rho = 0;    // min_s rho_s (minimized independently)
    int start = 0;  // lowest start vertex attaining delta
};

BestExtendedLayering best_extended_layering(const Graph& g);

// Tree on V(G): a central path plus degree-one vertices attached to it.
struct Caterpillar {
    int n = 0;
    std::vector<int> spine;   // central path, in order
    std::vector<int> attach;  // attach[v] = spine neighbor, or -1 if v on spine

    // O(1) tree distance using spine positions.
    int dist(int u, int v) const;
    std::vector<int> spine_position() const;  // pos of anchor, per vertex
};

Caterpillar canonical_caterpillar(const Graph& g, int s);

int distortion(const Graph& g, const Caterpillar& t);

struct AdcApproximation {
    Caterpillar tree;
    int distortion = 0;
};

// Best canonical caterpillar over all start vertices; distortion is at most
// 3*adc(G)+2.
AdcApproximation approx_adc(const Graph& g);

// Minimum distortion over all labeled caterpillars on V(G).
// Throws TooLarge past the cap.
int exact_adc(const Graph& g, int max_n = 7);

// Clique-path of T^{k+1} restricted to G; resulting length <= 2k+1.
// Throws DistortionExceeded when distortion(g,t) > k.
PathDecomposition decomposition_from_caterpillar(const Graph& g, const Caterpillar& t,
                                                 int k);

}  // namespace coarsepath

#endif
