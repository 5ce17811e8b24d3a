#include "codebounds/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cb {

namespace {

std::uint64_t encode_column(const std::vector<int>& c, int q) {
    std::uint64_t x = 0;
    for (int s : c) x = x * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(s);
    return x;
}

std::vector<int> decode_column(std::uint64_t x, int q, int s) {
    std::vector<int> c(s);
    for (int i = s - 1; i >= 0; --i) {
        c[i] = static_cast<int>(x % static_cast<std::uint64_t>(q));
        x /= static_cast<std::uint64_t>(q);
    }
    return c;
}

} // namespace

std::string OrbitKey::to_string() const {
    std::ostringstream o;
    o << size << ':';
    for (std::size_t i = 0; i < columns.size(); ++i) o << (i ? "," : "") << columns[i];
    return o.str();
}

OrbitKey OrbitKey::parse(const std::string& s) {
    OrbitKey k;
    auto colon = s.find(':');
    if (colon == std::string::npos) throw DomainError("malformed orbit key: " + s);
    k.size = std::stoi(s.substr(0, colon));
    std::string rest = s.substr(colon + 1);
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) k.columns.push_back(std::stoull(tok));
    return k;
}

std::size_t OrbitKeyHash::operator()(const OrbitKey& k) const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(k.size);
    for (auto c : k.columns) {
        h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

OrbitKey canonical_orbit(const std::vector<Word>& words_in, int q, SymbolGroup g) {
    std::vector<Word> words = words_in;
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    OrbitKey best;
    best.size = static_cast<int>(words.size());
    if (words.empty()) return best;
    const std::size_t n = words[0].size();
    const std::size_t s = words.size();
    std::vector<int> order(s);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::uint64_t> cols(n);
    std::vector<int> col(s);
    bool first = true;
    do {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t r = 0; r < s; ++r) col[r] = words[order[r]][i];
            cols[i] = encode_column(canonical_column(g, q, col), q);
        }
        std::sort(cols.begin(), cols.end());
        if (first || cols < best.columns) {
            best.columns = cols;
            first = false;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

std::vector<std::vector<int>> decode_columns(const OrbitKey& key, int q) {
    std::vector<std::vector<int>> out;
    for (auto c : key.columns) out.push_back(decode_column(c, q, key.size));
    return out;
}

std::vector<Word> orbit_representative(const OrbitKey& key, int q) {
    auto cols = decode_columns(key, q);
    std::vector<Word> words(key.size, Word(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (int r = 0; r < key.size; ++r) words[r][i] = cols[i][r];
    return words;
}

Integer orbit_size(const OrbitKey& key, int q, SymbolGroup g) {
    const int s = key.size;
    if (s == 0) return 1;
    const auto cols = decode_columns(key, q);
    const std::size_t n = cols.size();
    // Ordered tuples of distinct words whose column classes form the multiset
    // of some row permutation of the key, divided by s!.
    Integer per_multiset = factorial(static_cast<long>(n));
    {
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j < n && key.columns[j] == key.columns[i]) ++j;
            per_multiset /= factorial(static_cast<long>(j - i));
            i = j;
        }
    }
    for (const auto& c : cols) per_multiset *= column_orbit_size(g, q, c);
    std::set<std::vector<std::uint64_t>> distinct;
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> col(s);
    do {
        std::vector<std::uint64_t> m(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (int r = 0; r < s; ++r) col[r] = cols[i][perm[r]];
            m[i] = encode_column(canonical_column(g, q, col), q);
        }
        std::sort(m.begin(), m.end());
        distinct.insert(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    Integer total = per_multiset * static_cast<long>(distinct.size());
    return total / factorial(s);
}

} // namespace cb
