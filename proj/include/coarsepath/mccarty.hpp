#ifndef COARSEPATH_MCCARTY_HPP
#define COARSEPATH_MCCARTY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coarsepath/graph.hpp"

namespace coarsepath {

// True iff every a-b path meets D(center, r); endpoints inside the disk count.
bool disk_intercepts(const Graph& g, int center, int r, int a, int b);

// Triple u<v<w where each member fails to intercept at radius r-1, with
// shortest avoidance paths: paths[0] joins u,v off D(w,r-1), paths[1] joins
// v,w off D(u,r-1), paths[2] joins u,w off D(v,r-1).
struct MciCertificate {
    std::array<int, 3> triple{-1, -1, -1};
    std::array<std::vector<int>, 3> paths;
};

struct MciResult {
    int r = 0;
    std::optional<MciCertificate> certificate;  // absent iff r = 0
};

// Minimum r such that every vertex triple has a member whose radius-r disk
// intercepts all paths between the other two; 0 for n < 3.
MciResult mci(const Graph& g);

struct FatMinorWitness {
    enum class Kind { K3, K13 };
    Kind kind = Kind::K3;
    // K3: three sets, paths[0] joins sets 0,1; paths[1] joins 0,2;
    // paths[2] joins 1,2. K13: four sets with the hub first, paths[i] joins
    // set i+1 to the hub.
    std::vector<VertexSet> branch_sets;
    std::vector<std::vector<int>> paths;
    int K = 1;
};

struct FatVerdict {
    bool ok = true;
    std::string violation;  // first failed condition, empty when ok
};

FatVerdict verify_fat_minor(const Graph& g, const FatMinorWitness& w);

// Constructive extraction from a triple violating interception at radius
// 4K-1; the result always passes verify_fat_minor at K. Throws
// PreconditionFailed when mci(g) <= 4K-1.
FatMinorWitness extract_fat_minor(const Graph& g, int K);

}  // namespace coarsepath

#endif
