#pragma once

#include <cstddef>
#include <vector>

#include "relpat/pattern.hpp"

namespace relpat {

class DisjointSet {
public:
    explicit DisjointSet(std::size_t n);

    std::size_t find(std::size_t x);
    void unite(std::size_t a, std::size_t b);
    std::size_t size() const noexcept { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned char> rank_;
};

// Blocks are sorted internally and by their smallest element.
struct VariablePartition {
    std::vector<std::vector<VarId>> blocks;

    bool operator==(const VariablePartition&) const = default;
};

VariablePartition closure(const RelationalPattern& rp);
RelationalPattern normalize(const RelationalPattern& rp);
// The relational pattern with every pair of each closure block related.
RelationalPattern saturate(const RelationalPattern& rp);
bool ne_equivalent(const RelationalPattern& a, const RelationalPattern& b);

} // namespace relpat
