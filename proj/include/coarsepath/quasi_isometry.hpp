#ifndef COARSEPATH_QUASI_ISOMETRY_HPP
#define COARSEPATH_QUASI_ISOMETRY_HPP

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "coarsepath/decomposition.hpp"
#include "coarsepath/graph.hpp"

namespace coarsepath {

using Rational = boost::rational<long long>;

// Path x_0..x_{p-1} with positive rational edge weights.
struct WeightedPath {
    std::vector<Rational> weights;  // weights[i] = weight of edge x_i x_{i+1}

    int node_count() const { return static_cast<int>(weights.size()) + 1; }
    Rational dist(int i, int j) const;
    static WeightedPath unweighted(int nodes);
};

struct QuasiIsometryMap {
    std::vector<int> psi;  // psi[v] = path node, total on V(G)
    Rational L{1};
    Rational C{0};
};

struct QiVerdict {
    bool ok = true;
    std::string violation;  // empty when ok
    int u = -1, v = -1;     // extremal pair (or path node in v for condition ii)
    Rational slack{0};      // amount by which the worst constraint is missed
};

// Checks conditions (i) and (ii) of an (L,C)-quasi-isometry, exactly.
QiVerdict verify_qi(const Graph& g, const WeightedPath& p, const QuasiIsometryMap& m);

struct QiToPath {
    WeightedPath path;  // unweighted
    QuasiIsometryMap map;  // L = 1
};

// Projection of the best canonical caterpillar onto its spine; returns the
// smallest certified C, which is at most distortion+2.
QiToPath quasi_isometry_to_path(const Graph& g);

// Bags per path node at scale L+C; resulting length <= L(L+2C).
// Throws QiInvalid when verify_qi fails.
PathDecomposition decomposition_from_qi(const Graph& g, const WeightedPath& p,
                                        const QuasiIsometryMap& m);

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace coarsepath

#endif
