#ifndef COARSEPATH_ERRORS_HPP
#define COARSEPATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coarsepath {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct NotConnected : std::runtime_error {
    explicit NotConnected(const std::string& what = "graph is not connected")
        : std::runtime_error(what) {}
};

struct NotSimple : std::runtime_error {
    explicit NotSimple(const std::string& what = "graph has a loop or multi-edge")
        : std::runtime_error(what) {}
};

struct InvalidK : std::invalid_argument {
    explicit InvalidK(const std::string& what = "power exponent must be >= 1")
        : std::invalid_argument(what) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct NotAPermutation : std::invalid_argument {
    explicit NotAPermutation(const std::string& what = "ordering is not a permutation of V")
        : std::invalid_argument(what) {}
};

struct InvalidDecomposition : std::runtime_error {
    explicit InvalidDecomposition(const std::string& what) : std::runtime_error(what) {}
};

struct DistortionExceeded : std::runtime_error {
    explicit DistortionExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct QiInvalid : std::runtime_error {
    explicit QiInvalid(const std::string& what) : std::runtime_error(what) {}
};

struct NotAPath : std::invalid_argument {
    explicit NotAPath(const std::string& what = "vertex list is not a path of the graph")
        : std::invalid_argument(what) {}
};

struct NotShortestPath : std::invalid_argument {
    explicit NotShortestPath(const std::string& what = "path is not a shortest path")
        : std::invalid_argument(what) {}
};

struct NotDominating : std::invalid_argument {
    explicit NotDominating(const std::string& what) : std::invalid_argument(what) {}
};

struct TooManyPaths : std::runtime_error {
    explicit TooManyPaths(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionFailed : std::runtime_error {
    explicit PreconditionFailed(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coarsepath

#endif
