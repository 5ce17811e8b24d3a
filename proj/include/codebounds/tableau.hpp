#pragma once

#include <vector>

namespace cb {

/// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;
    int size() const;
    int height() const { return static_cast<int>(parts.size()); }
    /// Column heights (dual partition).
    std::vector<int> dual() const;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Partitions of n with at most max_height parts, in reverse lexicographic
/// order of parts: (4), (3,1), (2,2), ...
std::vector<Partition> partitions(int n, int max_height);

/// Rows are listed bottom-up: rows[0] is the longest. Entries are 1-based,
/// rows weakly increase, columns strictly increase with the row index.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
    /// Row-reading word (rows concatenated).
    std::vector<int> reading() const;
    /// count(s, j): number of entries s in row j (both 0-based here: s-1, j).
    int count(int symbol, int row) const;
    /// Total number of entries equal to `symbol`.
    int count(int symbol) const;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

/// T_{lambda,m}, ordered lexicographically by reading word.
std::vector<Tableau> semistandard_tableaux(const Partition& lambda, int m);

/// All compositions of n into k nonnegative parts, lexicographically descending.
std::vector<std::vector<int>> compositions(int n, int k);

} // namespace cb
