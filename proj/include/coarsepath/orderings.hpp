#ifndef COARSEPATH_ORDERINGS_HPP
#define COARSEPATH_ORDERINGS_HPP

#include <array>
#include <optional>
#include <vector>

#include "coarsepath/decomposition.hpp"
#include "coarsepath/graph.hpp"
#include "coarsepath/layering.hpp"

namespace coarsepath {

struct LinearLayout {
    std::vector<int> sigma;  // vertex order
    int mu = 1;              // power the layout is claimed for
};

// Lexicographically smallest asteroidal triple, or nullopt iff g is AT-free.
std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g);

struct PatResult {
    int k = 1;           // smallest k with G^k AT-free
    int admissible = 0;  // admissible vertex of G^k
};

PatResult pat(const Graph& g);

// A vertex with no unrelated pair, or nullopt; never nullopt on AT-free input.
std::optional<int> find_admissible_vertex(const Graph& g);

// A ccp-layout of g, or nullopt iff g is not a cocomparability graph.
// Recognition via transitive orientation of the complement (forcing classes).
std::optional<LinearLayout> cocomparability_layout(const Graph& g);

// Smallest k with G^k cocomparability.
int pcc(const Graph& g);

struct CcpVerdict {
    bool ok = true;
    std::array<int, 3> triple{-1, -1, -1};  // violating x<y<z when !ok
};

// True iff sigma is a ccp-layout of power(g, mu).
CcpVerdict verify_ccp(const Graph& g, const std::vector<int>& sigma, int mu);

// Layout by leftmost-bag index; verifies for mu = 2*length (mu = 1 when the
// decomposition has length 0, i.e. the single-vertex graph).
LinearLayout ccp_from_decomposition(const Graph& g, const PathDecomposition& pd);

// Spine order with attachments squeezed after their spine vertex; verifies
// for mu = 3*distortion + 2.
LinearLayout ccp_from_caterpillar(const Graph& g, const Caterpillar& t);

// BFS(P)-tree branch order; verifies for mu = 6k. Throws NotShortestPath /
// NotDominating.
LinearLayout ccp_from_dominating_path(const Graph& g, const std::vector<int>& path,
                                      int k);

}  // namespace coarsepath

#endif
