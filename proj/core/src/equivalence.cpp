#include "relpat/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>

#include "relpat/errors.hpp"

namespace relpat {

DisjointSet::DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSet::find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) {
        root = parent_[root];
    }
    while (parent_[x] != root) {
        std::size_t next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

void DisjointSet::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
        return;
    }
    if (rank_[a] < rank_[b]) {
        std::swap(a, b);
    }
    parent_[b] = a;
    if (rank_[a] == rank_[b]) {
        ++rank_[a];
    }
}

namespace {

std::optional<RelationKind> single_kind(const std::set<Constraint>& constraints, std::optional<RelationKind> kind) {
    for (const Constraint& c : constraints) {
        if (kind && *kind != c.kind) {
            throw PreconditionError("constraints mix relation kinds " + std::string(relation_name(*kind)) + " and " +
                                    std::string(relation_name(c.kind)));
        }
        kind = c.kind;
    }
    return kind;
}

// Renaming by first occurrence: position of each variable in the pattern's variable order.
std::unordered_map<VarId, VarId> first_occurrence_names(const Pattern& p) {
    std::unordered_map<VarId, VarId> rename;
    rename.reserve(p.size());
    VarId next = 1;
    for (const Symbol& s : p.symbols()) {
        if (s.is_variable()) {
            rename.emplace(s.var(), next++);
        }
    }
    return rename;
}

// For each normalized variable (1-based), the smallest normalized variable of its block.
std::vector<VarId> block_labels(const RelationalPattern& rp, const std::unordered_map<VarId, VarId>& rename) {
    const std::size_t n = rename.size();
    DisjointSet sets(n + 1);
    for (const Constraint& c : rp.constraints()) {
        sets.unite(rename.at(c.left), rename.at(c.right));
    }
    std::vector<VarId> smallest(n + 1, 0);
    std::vector<VarId> labels(n + 1, 0);
    for (VarId v = 1; v <= n; ++v) {
        VarId& s = smallest[sets.find(v)];
        if (s == 0) {
            s = v;
        }
        labels[v] = s;
    }
    return labels;
}

} // namespace

VariablePartition closure(const RelationalPattern& rp) {
    single_kind(rp.constraints(), std::nullopt);
    const std::vector<VarId> vars = rp.pattern().variables();
    std::unordered_map<VarId, std::size_t> index;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        index.emplace(vars[i], i);
    }
    DisjointSet sets(vars.size());
    for (const Constraint& c : rp.constraints()) {
        sets.unite(index.at(c.left), index.at(c.right));
    }
    std::map<std::size_t, std::vector<VarId>> groups;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        groups[sets.find(i)].push_back(vars[i]);
    }
    VariablePartition out;
    for (auto& [root, block] : groups) {
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

RelationalPattern normalize(const RelationalPattern& rp) {
    const auto rename = first_occurrence_names(rp.pattern());
    SymbolString symbols = rp.pattern().symbols();
    for (Symbol& s : symbols) {
        if (s.is_variable()) {
            s = Symbol::variable(rename.at(s.var()));
        }
    }
    std::set<Constraint> constraints;
    for (const Constraint& c : rp.constraints()) {
        constraints.insert({c.kind, rename.at(c.left), rename.at(c.right)});
    }
    return RelationalPattern(rp.alphabet(), Pattern(std::move(symbols)), std::move(constraints));
}

RelationalPattern saturate(const RelationalPattern& rp) {
    auto kind = single_kind(rp.constraints(), std::nullopt);
    if (!kind) {
        return rp;
    }
    std::set<Constraint> constraints;
    for (const auto& block : closure(rp).blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                constraints.insert({*kind, block[i], block[j]});
            }
        }
    }
    return RelationalPattern(rp.alphabet(), rp.pattern(), std::move(constraints));
}

bool ne_equivalent(const RelationalPattern& a, const RelationalPattern& b) {
    if (!a.alphabet().same_letters(b.alphabet())) {
        throw PreconditionError("ne_equivalent needs both patterns over the same alphabet");
    }
    if (a.alphabet().size() < 2) {
        throw PreconditionError("ne_equivalent needs an alphabet with at least two letters");
    }
    auto kind = single_kind(b.constraints(), single_kind(a.constraints(), std::nullopt));
    if (kind && !is_letter_antisymmetric_equivalence(*kind)) {
        throw PreconditionError("ne_equivalent supports eq, ab and composplus only, not " +
                                std::string(relation_name(*kind)));
    }

    const auto& sa = a.pattern().symbols();
    const auto& sb = b.pattern().symbols();
    if (sa.size() != sb.size()) {
        return false;
    }
    const auto ra = first_occurrence_names(a.pattern());
    const auto rb = first_occurrence_names(b.pattern());
    if (ra.size() != rb.size()) {
        return false;
    }
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (sa[i].is_variable() != sb[i].is_variable()) {
            return false;
        }
        if (sa[i].is_variable() ? ra.at(sa[i].var()) != rb.at(sb[i].var()) : sa[i].letter() != sb[i].letter()) {
            return false;
        }
    }
    return block_labels(a, ra) == block_labels(b, rb);
}

} // namespace relpat
