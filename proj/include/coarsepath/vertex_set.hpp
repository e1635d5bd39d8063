#ifndef COARSEPATH_VERTEX_SET_HPP
#define COARSEPATH_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace coarsepath {

// Subset of {0,...,n-1} as a bitmask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const { return (bits_[v >> 6] >> (v & 63)) & 1u; }
    void insert(int v) { bits_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) { bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int size() const {
        int c = 0;
        for (auto w : bits_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~other.bits_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int v = 0; v < n_; ++v)
            if (contains(v)) f(v);
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace coarsepath

#endif
