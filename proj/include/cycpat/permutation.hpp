#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cycpat {

/// A permutation of {1..n} in one-line notation.  Immutable after
/// construction; the empty permutation (n = 0) is allowed.
class Permutation {
public:
    Permutation() = default;
    /// Validates that word is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(word_.size()); }
    /// Image of i under the permutation, 1-based.
    int image(int i) const { return word_[static_cast<size_t>(i) - 1]; }
    /// Value in position pos of the one-line word, 1-based.
    int at(int pos) const { return word_[static_cast<size_t>(pos) - 1]; }
    const std::vector<int>& word() const { return word_; }

    bool operator==(const Permutation& o) const = default;
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

    std::string str() const;

private:
    std::vector<int> word_;
};

/// red(w): relabel a word of distinct integers to the order-isomorphic
/// permutation of 1..|w|.  Duplicate entries are rejected.
Permutation reduce(const std::vector<int>& letters);

enum class CycleOrder {
    AscendingMinima,  // canonical
    DescendingMinima, // the order used by the fundamental bijection
};

/// Cycle decomposition with every cycle written minimum-first.  Only the
/// order of the cycles differs between the two CycleOrder values.
class CycleForm {
public:
    CycleForm(const Permutation& p, CycleOrder order = CycleOrder::AscendingMinima);
    /// Build from explicit cycles (entries must partition 1..n); cycles are
    /// rotated minimum-first and sorted into the requested order.
    static CycleForm from_cycles(std::vector<std::vector<int>> cycles,
                                 CycleOrder order = CycleOrder::AscendingMinima);

    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    int size() const { return n_; }
    CycleOrder order() const { return order_; }

    /// Functional recomposition: within a cycle (a_0,...,a_{m-1}) the
    /// permutation maps a_t to a_{t+1 mod m}.
    Permutation to_permutation() const;

    std::string str() const; // "(1,2,3)(4,5)"

private:
    CycleForm() = default;
    std::vector<std::vector<int>> cycles_;
    int n_ = 0;
    CycleOrder order_ = CycleOrder::AscendingMinima;
};

struct Stats {
    int des = 0;
    int cdes = 0;
    int cyc = 0;
    int lrmin = 0;
    bool operator==(const Stats&) const = default;
};

int descent_count(const std::vector<int>& word);
int left_to_right_minima(const std::vector<int>& word);

/// des, cdes, cyc and left-to-right minima of p.  cdes of a one-cycle is 1.
Stats stats(const Permutation& p);

/// sigma-bar: concatenate the min-first cycles in descending-minima order.
Permutation fundamental_bijection(const Permutation& p);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
/// Reverse the traversal of every cycle, keeping the minimum first.
Permutation cycle_reverse(const Permutation& p);
/// Replace i by n+1-i inside the cycle structure, then re-canonicalize.
Permutation cycle_complement(const Permutation& p);

/// Accepts "1 3 2", compact digits "132" (n <= 9), or cycles "(1,3)(2)".
Permutation parse_permutation(std::string_view text);

} // namespace cycpat
