#ifndef ZETACOMP_POSET_HPP
#define ZETACOMP_POSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zetacomp {

enum class RelationMode { covers, relations };

/* Raw ingestion form: element labels plus strict pairs (a, b) meaning a < b.
   In both modes the order relation is the reflexive-transitive closure of
   the pairs; "covers" merely documents that the caller believes the pairs
   to be cover relations. */
struct PosetSpec {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> pairs;
    RelationMode mode = RelationMode::covers;
};

/* A finite poset over indexed elements x_0..x_{n-1}. The relation table is
   validated (reflexive, antisymmetric, transitive) at construction and the
   value is immutable afterwards, so instances can be shared freely across
   threads. */
class Poset {
public:
    Poset() = default; // the empty poset

    /* Validates the table and names; throws CycleError on an antisymmetry
       violation, PosetError on a reflexivity/transitivity violation,
       DuplicateNameError on repeated labels. */
    static Poset from_leq(std::vector<std::string> names, std::vector<std::uint8_t> leq);

    int size() const { return n_; }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }

    bool leq(int i, int j) const
    {
        return leq_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j)] != 0;
    }
    bool less(int i, int j) const { return i != j && leq(i, j); }

    const std::vector<std::uint8_t>& table() const { return leq_; }

    bool operator==(const Poset&) const = default;

private:
    Poset(int n, std::vector<std::string> names, std::vector<std::uint8_t> leq)
        : n_(n), names_(std::move(names)), leq_(std::move(leq))
    {
    }

    int n_ = 0;
    std::vector<std::string> names_;
    std::vector<std::uint8_t> leq_; // row-major n*n, leq_[i*n+j] = (x_i <= x_j)
};

/* Closure-based construction from labels and strict pairs. Throws
   DuplicateNameError, UnknownLabelError, or CycleError. */
Poset build(const PosetSpec& spec);

/* Topological order compatible with the poset, ties broken by smallest
   original index. Position i of the result holds the original index of the
   element placed i-th, so relabel(p, linear_extension(p)) has an upper
   unitriangular zeta matrix. */
std::vector<int> linear_extension(const Poset& p);

/* leq'[i][j] = leq[perm[i]][perm[j]], names permuted alike.
   Throws InvalidPermutation unless perm is a bijection on 0..n-1. */
Poset relabel(const Poset& p, const std::vector<int>& perm);

/* Induced subposet on everything except element i. */
Poset remove_element(const Poset& p, int i);

/* The maximum (minimum) element when one exists: above (below) every other
   element. Unique by antisymmetry. */
std::optional<int> find_maximum(const Poset& p);
std::optional<int> find_minimum(const Poset& p);

/* True iff every pair of elements is comparable. Vacuously true for n <= 1. */
bool is_total_order(const Poset& p);

} // namespace zetacomp

#endif
