#pragma once

#include "codebounds/code.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cb {

/// Extended binary Golay code, (24, 4096, 8), from the systematic generator [I | A].
Code golay_extended();

/// Extended code with the last coordinate deleted: (23, 4096, 7).
Code golay_perfect();

/// Extended code shortened on the first i coordinates: 2^(12-i) words of length 24-i.
Code golay_shortened(int i);

/// Perfect code shortened on the first i coordinates: 2^(12-i) words of length 23-i.
Code golay_perfect_shortened(int i);

/// All words of Hamming weight w in c.
Code weight_class(const Code& c, long w);

/// The 12 generator rows as 24-character bit strings.
const std::vector<std::string>& golay_generator_rows();

/// M~ u -M~ u {0} over Z_5: 15 words of length 7, pairwise Lee distance 9.
Code lee_5_7_9();

/// C' u C'' over Z_6: 18 words of length 4, minimum Lee distance 6.
Code lee_6_4_6();

/// 16 coset representatives u_0..u_15 of length 20.
const std::vector<std::string>& coset20_representatives();

/// The five rows of D; their span has 16 elements.
const std::vector<std::string>& coset20_generators();

/// Masks of the 15 listed (20,8) codes of size 256.
const std::vector<std::uint16_t>& coset20_table_masks();

/// Union of u_i + <D>, with coset i complemented when bit i of flips is set.
Code coset20(std::uint16_t flips);

/// FNV-1a over all embedded construction tables, to detect transcription drift.
std::uint64_t constructions_checksum();

/// Incidence structure of a symmetric (mu, q)-net on mu*q^2 points and blocks.
/// Rows are points, columns are blocks. Column index (i, a) = i*q + a.
struct SymmetricNet {
    int mu = 0;
    int q = 0;
    std::vector<std::vector<std::uint8_t>> incidence;
    /// point_classes[k] lists the row indices of the k-th point parallel class.
    std::vector<std::vector<int>> point_classes;
    /// block_classes[k] lists the column indices of the k-th block parallel class.
    std::vector<std::vector<int>> block_classes;

    int size() const { return mu * q * q; }
};

struct NetCheck {
    bool shape = false;
    bool permutation_blocks = false;
    bool s1 = false;
    bool s2 = false;
    bool s3 = false;
    bool gram = false;  // M M^T = M^T M = A
    bool ok() const { return shape && permutation_blocks && s1 && s2 && s3 && gram; }
};

/// Words are grouped into classes of q words at pairwise distance n; classes keep
/// the order of first appearance in `words`, so the caller controls the row order.
SymmetricNet net_from_words(int q, const std::vector<Word>& words);
SymmetricNet net_from_code(const Code& c);

/// Reads row (point) k as the word w with w_i = a iff column i*q + a is set.
Code code_from_net(const SymmetricNet& net);

NetCheck check_net(const SymmetricNet& net);

/// The 9-word (3,2)_3 code in the row order of the worked example.
std::vector<Word> net_example_words();

/// The 9x9 incidence matrix displayed for that example.
std::vector<std::vector<std::uint8_t>> net_example_incidence();

} // namespace cb
