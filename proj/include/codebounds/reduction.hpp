#pragma once

#include "codebounds/checked.hpp"
#include "codebounds/ptau.hpp"
#include "codebounds/repset.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cb {

/// A run of coordinates on which the stabilizer acts as G^len x| S_len.
/// `fixed` holds the symbols of the fixed words D on these coordinates.
struct Segment {
    int length = 0;
    BaseAction action;
    RepresentativeSet rep;
    std::vector<int> fixed;
};

/// counts[f][s-1] = number of entries s in the tableau of factor f, where the
/// factors are the (segment, representative matrix) pairs in order.
using RowFilter = std::function<bool(const std::vector<std::vector<int>>& counts)>;

struct ReductionInput {
    std::vector<Segment> segments;
    RowFilter row_filter;
    /// Adds the empty-set row and column to the block in which every segment
    /// puts all coordinates in its first factor with a one-row shape.
    bool border = false;
    /// Compute only the upper triangle (valid once entries are mapped to code orbits).
    bool symmetric = true;
    std::string label_prefix;
};

template <class S>
struct LinForm {
    S constant{};
    std::map<int, S> terms; // key id -> coefficient

    bool is_zero() const;
};

template <class S>
struct ReducedBlock {
    std::string label;
    int dim = 0;
    bool bordered = false;
    /// Full symmetric storage, row-major dim x dim.
    std::vector<LinForm<S>> entries;
    const LinForm<S>& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
    LinForm<S>& at(int i, int j) { return entries[static_cast<std::size_t>(i) * dim + j]; }
};

/// Maps a monomial in class variables (segment offsets applied) to a key id,
/// or -1 when the corresponding variable is set to zero.
using MonomialMapper = std::function<int(const Monomial&)>;

struct ReductionLayout {
    std::vector<LambdaClasses> classes; // per segment
    std::vector<int> offsets;           // class id offset per segment
    int total_classes = 0;
    /// Splits a monomial into per-segment class lists (offsets removed).
    std::vector<std::vector<int>> split(const Monomial& m) const;
};

ReductionLayout make_layout(const ReductionInput& in);

/// Assemble all blocks. `prune` removes identically zero rows and columns.
template <class S>
std::vector<ReducedBlock<S>> reduce(const ReductionInput& in, const ReductionLayout& layout,
                                    const MonomialMapper& mapper, bool prune = true);

/// Unmapped entry polynomial for a given block (used by cross-checks):
/// the product over factors of p_{tau_f,sigma_f}(F_f).
struct BlockShape {
    std::vector<int> sizes;              // per factor
    std::vector<Partition> shapes;       // per factor
    std::vector<std::vector<Tableau>> rows; // each row: one tableau per factor
    bool bordered = false;
    std::string label;
};

std::vector<BlockShape> enumerate_blocks(const ReductionInput& in);

RPoly product_p(const ReductionInput& in, const ReductionLayout& layout, const std::vector<Tableau>& tau,
                const std::vector<Tableau>& sigma);

extern template std::vector<ReducedBlock<CheckedInt>> reduce<CheckedInt>(const ReductionInput&,
                                                                         const ReductionLayout&,
                                                                         const MonomialMapper&, bool);
extern template std::vector<ReducedBlock<double>> reduce<double>(const ReductionInput&, const ReductionLayout&,
                                                                 const MonomialMapper&, bool);

} // namespace cb
