#pragma once

#include "codebounds/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cb {

enum class Metric { Hamming, Lee, LeeInf };

Metric parse_metric(const std::string& s);
std::string metric_name(Metric m);

constexpr int kMaxAlphabet = 1 << 16;

using Word = std::vector<int>;

/// A set of distinct words of common length n over the alphabet [0, q).
/// Words are kept in lexicographic order.
class Code {
public:
    Code() = default;
    Code(int q, int n, std::vector<Word> words);

    int q() const { return q_; }
    int n() const { return n_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const std::vector<Word>& words() const { return words_; }
    const Word& operator[](std::size_t i) const { return words_[i]; }
    bool contains(const Word& w) const;

    friend bool operator==(const Code& a, const Code& b) {
        return a.q_ == b.q_ && a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    int q_ = 2;
    int n_ = 0;
    std::vector<Word> words_;
};

long distance(Metric m, int q, const Word& u, const Word& v);
long hamming_weight(const Word& w);

/// std::nullopt encodes infinity (codes of size at most one).
std::optional<long> min_distance(Metric m, const Code& c);

/// a_i = |C|^{-1} #{(u,v) in C^2 : d_H(u,v) = i}, i = 0..n.
std::vector<Rational> distance_distribution(const Code& c);

/// Number of words of each Hamming weight, index 0..n.
std::vector<long> weight_distribution(const Code& c);

enum class SymbolAction { Full, Dihedral, Reflection };

/// Element of G^n x| S_n. Word w maps to w' with w'[perm[i]] = sym_i(w[i]).
struct GroupElement {
    SymbolAction kind = SymbolAction::Full;
    std::vector<int> perm;
    // Full: maps[i] is a permutation of [q].
    std::vector<std::vector<int>> maps;
    // Dihedral: x -> (reflect ? -x : x) + rot. Reflection uses only `reflect`.
    std::vector<int> rot;
    std::vector<bool> reflect;

    static GroupElement identity(SymbolAction kind, int q, int n);
    int apply_symbol(int col, int x, int q) const;
};

Word apply_group(const GroupElement& g, int q, const Word& w);
Code apply_group(const GroupElement& g, const Code& c);

// Binary linear algebra; words of a q = 2 code.
Code f2_span(const Code& c);
Code f2_dual(const Code& c);
int f2_rank(const Code& c);

struct VerifyReport {
    std::size_t size = 0;
    std::optional<long> dmin;
    bool weight_uniform = true;
    std::optional<long> weight;
    bool pass = false;
};

VerifyReport verify_code(const Code& c, Metric m, long d, std::optional<long> w = std::nullopt);

Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
void write_code(std::ostream& out, const Code& c, const std::string& comment = "");

/// Parse a digit string such as "0113133" into a word.
Word word_from_digits(const std::string& s);

} // namespace cb
