#pragma once

#include "codebounds/poly.hpp"

#include <string>
#include <vector>

namespace cb {

/// Group acting on the symbols of one coordinate, applied simultaneously to
/// every word of a tuple.
enum class SymbolGroup {
    Symmetric,  // S_q on [q]
    Dihedral,   // D_q on Z_q
    Reflection, // x -> -x on Z_q
    Trivial
};

/// Lexicographically smallest image of a column (one symbol per word) under
/// the diagonal action of the symbol group.
std::vector<int> canonical_column(SymbolGroup g, int q, const std::vector<int>& col);

/// Number of distinct images of a column under the symbol group.
Integer column_orbit_size(SymbolGroup g, int q, const std::vector<int>& col);

/// Base set Z = [q]^r with the diagonal action of a symbol group.
struct BaseAction {
    int q = 2;
    int r = 1;
    SymbolGroup group = SymbolGroup::Trivial;

    int zsize() const;
    std::vector<int> decode(int z) const;
    int encode(const std::vector<int>& symbols) const;
};

/// Orbits of Z x Z. Class labels follow lexicographic order of the canonical
/// representatives; a representative lists the r symbols of z then those of z'.
struct LambdaClasses {
    BaseAction action;
    std::vector<std::vector<int>> reps;
    std::vector<long> sizes;
    std::vector<int> class_of; // indexed by z * zsize + z'

    static LambdaClasses build(const BaseAction& a);
    int size() const { return static_cast<int>(reps.size()); }
    int of(int z, int zp) const { return class_of[static_cast<std::size_t>(z) * action.zsize() + zp]; }
};

enum class RepKind { SqSingle, SqPairs, S2Reflection, Dihedral, TrivialF2, IdentityQ };

std::string rep_kind_name(RepKind k);

/// Ordered matrices B_1..B_k; B[i][j] is column j of B_i as a vector over Z.
/// Unnormalized: scalar factors that do not affect semidefiniteness are dropped.
struct RepresentativeSet {
    RepKind kind = RepKind::SqSingle;
    int q = 2;
    int zsize = 0;
    bool exact = true;
    std::vector<int> m;
    std::vector<std::vector<std::vector<Rational>>> B;
    std::vector<std::vector<std::vector<double>>> Bd; // populated for every kind
};

/// identity_q yields the standard basis of [q] (trivial group); the others
/// follow the usual conventions for their groups.
RepresentativeSet rep_set(RepKind kind, int q);

/// The base action matching a representative set.
BaseAction base_action_for(RepKind kind, int q);

/// (F_i)_{j,h} = sum over classes P of sum_{(x,y) in P} B_i(j)[x] B_i(h)[y] a*_P.
/// Class variable ids are offset by `var_offset`.
std::vector<std::vector<std::vector<RPoly>>> f_table(const RepresentativeSet& rs, const LambdaClasses& cls,
                                                     int var_offset = 0);
std::vector<std::vector<std::vector<DPoly>>> f_table_double(const RepresentativeSet& rs, const LambdaClasses& cls,
                                                            int var_offset = 0);

/// f(b) = sum_z b[z] a*_{class(z,z)}, used for the border row.
RPoly diagonal_form(const std::vector<Rational>& b, const LambdaClasses& cls, int var_offset = 0);
DPoly diagonal_form_double(const std::vector<double>& b, const LambdaClasses& cls, int var_offset = 0);

} // namespace cb
