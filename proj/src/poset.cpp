#include "zetacomp/poset.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "zetacomp/errors.hpp"

namespace zetacomp {

namespace {

std::size_t idx(int i, int j, int n)
{
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
}

/* Warshall-style iterate-to-fixpoint closure on the boolean table. */
void transitive_close(std::vector<std::uint8_t>& t, int n)
{
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!t[idx(i, k, n)])
                continue;
            const std::uint8_t* rk = t.data() + idx(k, 0, n);
            std::uint8_t* ri = t.data() + idx(i, 0, n);
            for (int j = 0; j < n; ++j)
                ri[j] |= rk[j];
        }
}

} // namespace

Poset Poset::from_leq(std::vector<std::string> names, std::vector<std::uint8_t> leq)
{
    const int n = static_cast<int>(names.size());
    if (leq.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw PosetError("relation table size does not match the number of elements");

    for (int i = 0; i < n; ++i)
        if (!leq[idx(i, i, n)])
            throw PosetError("relation is not reflexive at element '" + names[static_cast<std::size_t>(i)] + "'");

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (leq[idx(i, j, n)] && leq[idx(j, i, n)])
                throw CycleError("cycle through '" + names[static_cast<std::size_t>(i)] + "' and '" +
                                 names[static_cast<std::size_t>(j)] + "' violates antisymmetry");

    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (!leq[idx(i, k, n)])
                continue;
            for (int j = 0; j < n; ++j)
                if (leq[idx(k, j, n)] && !leq[idx(i, j, n)])
                    throw PosetError("relation is not transitive via '" + names[static_cast<std::size_t>(k)] + "'");
        }

    std::unordered_set<std::string> seen;
    for (const auto& name : names)
        if (!seen.insert(name).second)
            throw DuplicateNameError("duplicate element name '" + name + "'");

    return Poset(n, std::move(names), std::move(leq));
}

Poset build(const PosetSpec& spec)
{
    const int n = static_cast<int>(spec.names.size());

    std::unordered_map<std::string, int> index;
    index.reserve(spec.names.size());
    for (int i = 0; i < n; ++i) {
        if (!index.emplace(spec.names[static_cast<std::size_t>(i)], i).second)
            throw DuplicateNameError("duplicate element name '" + spec.names[static_cast<std::size_t>(i)] + "'");
    }

    std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        table[idx(i, i, n)] = 1;

    for (const auto& [lo, hi] : spec.pairs) {
        auto a = index.find(lo);
        if (a == index.end())
            throw UnknownLabelError("unknown label '" + lo + "' in pair list");
        auto b = index.find(hi);
        if (b == index.end())
            throw UnknownLabelError("unknown label '" + hi + "' in pair list");
        if (a->second == b->second)
            throw CycleError("pair ('" + lo + "', '" + lo + "') is a one-element cycle");
        table[idx(a->second, b->second, n)] = 1;
    }

    transitive_close(table, n);

    // Antisymmetry is checked after closure: cycles in the input pairs
    // surface here as CycleError regardless of mode.
    return Poset::from_leq(spec.names, std::move(table));
}

std::vector<int> linear_extension(const Poset& p)
{
    const int n = p.size();
    std::vector<int> remaining_below(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (p.less(i, j))
                ++remaining_below[static_cast<std::size_t>(j)];

    // Kahn's algorithm with a min-heap: the smallest ready index goes first,
    // which makes the extension deterministic.
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int j = 0; j < n; ++j)
        if (remaining_below[static_cast<std::size_t>(j)] == 0)
            ready.push(j);

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int j = 0; j < n; ++j)
            if (p.less(v, j) && --remaining_below[static_cast<std::size_t>(j)] == 0)
                ready.push(j);
    }
    return order;
}

Poset relabel(const Poset& p, const std::vector<int>& perm)
{
    const int n = p.size();
    if (static_cast<int>(perm.size()) != n)
        throw InvalidPermutation("permutation length does not match the poset size");
    std::vector<std::uint8_t> hit(static_cast<std::size_t>(n), 0);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)])
            throw InvalidPermutation("not a bijection on 0.." + std::to_string(n - 1));
        hit[static_cast<std::size_t>(v)] = 1;
    }

    std::vector<std::string> names(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        names[static_cast<std::size_t>(i)] = p.name(perm[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j)
            table[idx(i, j, n)] =
                p.leq(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1 : 0;
    }
    return Poset::from_leq(std::move(names), std::move(table));
}

Poset remove_element(const Poset& p, int element)
{
    const int n = p.size();
    if (element < 0 || element >= n)
        throw IndexOutOfRange("element index " + std::to_string(element) + " out of range for n=" +
                              std::to_string(n));

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n) - 1);
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < n; ++i)
        if (i != element) {
            keep.push_back(i);
            names.push_back(p.name(i));
        }

    const int m = n - 1;
    std::vector<std::uint8_t> table(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[idx(i, j, m)] = p.leq(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]) ? 1 : 0;
    return Poset::from_leq(std::move(names), std::move(table));
}

std::optional<int> find_maximum(const Poset& p)
{
    const int n = p.size();
    for (int j = 0; j < n; ++j) {
        bool above_all = true;
        for (int i = 0; i < n && above_all; ++i)
            above_all = p.leq(i, j);
        if (above_all)
            return j;
    }
    return std::nullopt;
}

std::optional<int> find_minimum(const Poset& p)
{
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
        bool below_all = true;
        for (int j = 0; j < n && below_all; ++j)
            below_all = p.leq(i, j);
        if (below_all)
            return i;
    }
    return std::nullopt;
}

bool is_total_order(const Poset& p)
{
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!p.leq(i, j) && !p.leq(j, i))
                return false;
    return true;
}

} // namespace zetacomp
