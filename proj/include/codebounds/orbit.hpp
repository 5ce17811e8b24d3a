#pragma once

#include "codebounds/code.hpp"
#include "codebounds/repset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cb {

/// Canonical label of the orbit of a small code under G^n x| S_n, where G is
/// the symbol group applied per coordinate. `columns` holds the sorted
/// canonical column codes of the lexicographically least word ordering.
struct OrbitKey {
    int size = 0; // number of distinct words
    std::vector<std::uint64_t> columns;

    friend auto operator<=>(const OrbitKey&, const OrbitKey&) = default;
    std::string to_string() const;
    static OrbitKey parse(const std::string& s);
};

struct OrbitKeyHash {
    std::size_t operator()(const OrbitKey& k) const noexcept;
};

/// Duplicated words are collapsed before canonicalization.
OrbitKey canonical_orbit(const std::vector<Word>& words, int q, SymbolGroup g);

/// One column per coordinate, rows in the order of the canonical word ordering.
std::vector<std::vector<int>> decode_columns(const OrbitKey& key, int q);

/// A representative code of the orbit (words in the canonical order).
std::vector<Word> orbit_representative(const OrbitKey& key, int q);

/// Number of codes (sets of words) in the orbit.
Integer orbit_size(const OrbitKey& key, int q, SymbolGroup g);

} // namespace cb
