#ifndef COARSEPATH_DECOMPOSITION_HPP
#define COARSEPATH_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "coarsepath/graph.hpp"

namespace coarsepath {

struct PathDecomposition {
    std::vector<VertexSet> bags;
};

struct DecompositionMetrics {
    int length = 0;
    int breadth = 0;
    int inner_length = 0;
    int inner_breadth = 0;
    std::optional<int> strong_breadth;
    bool disconnected_bag = false;  // some G[X_i] is disconnected; inner
                                    // metrics then cover finite pairs only
};

struct ValidationIssue {
    enum Kind { MissingVertex, UncoveredEdge, ContiguityBreak } kind;
    // MissingVertex: a = vertex. UncoveredEdge: a,b = endpoints.
    // ContiguityBreak: a = vertex, b < c = bag indices with a gap between.
    int a = -1, b = -1, c = -1;
    std::string describe() const;
};

// Empty result iff pd is a valid path-decomposition of g.
std::vector<ValidationIssue> validate(const Graph& g, const PathDecomposition& pd);

// Throws InvalidDecomposition when pd fails validate.
DecompositionMetrics metrics(const Graph& g, const PathDecomposition& pd);

// Normalized decomposition of a vertex ordering: bag i is sigma[i] plus every
// earlier vertex with a neighbor at position >= i. Throws NotAPermutation.
PathDecomposition from_order(const Graph& g, const std::vector<int>& sigma);

struct DecompositionSearchResult {
    int value = 0;
    PathDecomposition witness;
    std::vector<int> order;  // ordering that generated the witness
};

// Exact minima over all vertex orderings of the normalized decomposition's
// length/breadth (equal to pl(G)/pb(G)). Throws TooLarge past the cap.
DecompositionSearchResult exact_path_length(const Graph& g, int max_n = 9);
DecompositionSearchResult exact_path_breadth(const Graph& g, int max_n = 9);

}  // namespace coarsepath

#endif
