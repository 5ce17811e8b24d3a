#include "codebounds/constructions.hpp"

#include <algorithm>
#include <set>

namespace cb {

namespace {

const std::vector<std::string> kGolayRows = {
    "100000000000110111000101", "010000000000101110001011", "001000000000011100010111",
    "000100000000111000101101", "000010000000110001011011", "000001000000100010110111",
    "000000100000000101101111", "000000010000001011011101", "000000001000010110111001",
    "000000000100101101110001", "000000000010011011100011", "000000000001111111111110",
};

const std::vector<std::string> kCosetReps = {
    "00000000000000000000", "00000101010101011010", "00001001011001101100", "00001100001100110110",
    "10100000010101101001", "10100101000000110011", "10101001001100000101", "10101100011001011111",
    "11000000011000110101", "11000101001101101111", "11001001000001011001", "11001100010100000011",
    "01100000001101011100", "01100101011000000110", "01101001010100110000", "01101100000001101010",
};

const std::vector<std::string> kCosetGenerators = {
    "00001111111111111111", "11110000111111111111", "11111111000011111111",
    "11111111111100001111", "11111111111111110000",
};

const std::vector<std::uint16_t> kTableMasks = {0x0,   0x1,   0x3,   0x7,   0xf,   0x13,  0x17, 0x33,
                                                0x53,  0x117, 0x11e, 0x136, 0x356, 0x365, 0x36a};

const std::vector<std::string> kLee646Second = {"1153", "1315", "1531", "3111", "3555",
                                                "5135", "5351", "5513", "3333"};

const std::vector<std::string> kTernaryB = {"0000", "0111", "0222", "1012", "1120",
                                            "1201", "2021", "2102", "2210"};

Word bits_word(const std::string& s) {
    Word w(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) w[i] = s[i] - '0';
    return w;
}

Code from_set(int q, int n, const std::set<Word>& s) { return Code(q, n, std::vector<Word>(s.begin(), s.end())); }

Code shorten_first(const Code& c, int i) {
    if (i < 0 || i > c.n()) throw DomainError("shortening count out of range");
    std::vector<Word> out;
    for (const auto& w : c.words()) {
        if (std::any_of(w.begin(), w.begin() + i, [](int x) { return x != 0; })) continue;
        out.emplace_back(w.begin() + i, w.end());
    }
    return Code(c.q(), c.n() - i, std::move(out));
}

} // namespace

const std::vector<std::string>& golay_generator_rows() { return kGolayRows; }

Code golay_extended() {
    std::vector<Word> gens;
    for (const auto& r : kGolayRows) gens.push_back(bits_word(r));
    return f2_span(Code(2, 24, gens));
}

Code golay_perfect() {
    const Code ext = golay_extended();
    std::set<Word> s;
    for (const auto& w : ext.words()) s.insert(Word(w.begin(), w.end() - 1));
    return from_set(2, 23, s);
}

Code golay_shortened(int i) {
    if (i < 1 || i > 4) throw DomainError("golay shortening supports i = 1..4");
    return shorten_first(golay_extended(), i);
}

Code golay_perfect_shortened(int i) {
    if (i < 1 || i > 4) throw DomainError("golay shortening supports i = 1..4");
    return shorten_first(golay_perfect(), i);
}

Code weight_class(const Code& c, long w) {
    std::vector<Word> out;
    for (const auto& x : c.words())
        if (hamming_weight(x) == w) out.push_back(x);
    if (out.empty()) throw DomainError("no words of weight " + std::to_string(w));
    return Code(c.q(), c.n(), std::move(out));
}

Code lee_5_7_9() {
    std::set<Word> s;
    s.insert(Word(7, 0));
    for (int i = 0; i < 7; ++i) {
        Word row(7), neg(7);
        for (int j = 0; j < 7; ++j) {
            int t = (i + j) % 7;
            int v = t == 0 ? 0 : (t == 1 || t == 2 || t == 4) ? 1 : 3;
            row[j] = v;
            neg[j] = (5 - v) % 5;
        }
        s.insert(row);
        s.insert(neg);
    }
    return from_set(5, 7, s);
}

Code lee_6_4_6() {
    std::set<Word> s;
    for (const auto& b : kTernaryB) {
        Word w = bits_word(b);
        for (int& x : w) x = (2 * x) % 6;
        s.insert(w);
    }
    for (const auto& w : kLee646Second) s.insert(bits_word(w));
    return from_set(6, 4, s);
}

const std::vector<std::string>& coset20_representatives() { return kCosetReps; }
const std::vector<std::string>& coset20_generators() { return kCosetGenerators; }
const std::vector<std::uint16_t>& coset20_table_masks() { return kTableMasks; }

Code coset20(std::uint16_t flips) {
    std::vector<Word> gens;
    for (const auto& g : kCosetGenerators) gens.push_back(bits_word(g));
    const Code span = f2_span(Code(2, 20, gens));
    std::set<Word> s;
    for (std::size_t i = 0; i < kCosetReps.size(); ++i) {
        Word u = bits_word(kCosetReps[i]);
        if ((flips >> i) & 1U)
            for (int& x : u) x ^= 1;
        for (const auto& v : span.words()) {
            Word w(20);
            for (int k = 0; k < 20; ++k) w[k] = u[k] ^ v[k];
            s.insert(w);
        }
    }
    return from_set(2, 20, s);
}

std::uint64_t constructions_checksum() {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
        h ^= 0xff;
        h *= 1099511628211ULL;
    };
    for (const auto* tab : {&kGolayRows, &kCosetReps, &kCosetGenerators, &kLee646Second, &kTernaryB})
        for (const auto& s : *tab) feed(s);
    for (auto m : kTableMasks) feed(std::to_string(m));
    return h;
}

SymmetricNet net_from_words(int q, const std::vector<Word>& words) {
    if (words.empty() || q < 2) throw DomainError("net needs q >= 2 and a nonempty code");
    const int n = static_cast<int>(words[0].size());
    if (n % q != 0) throw DomainError("length is not a multiple of q");
    const int mu = n / q;
    if (static_cast<long>(words.size()) != static_cast<long>(mu) * q * q)
        throw DomainError("code size is not mu*q^2");
    const Code check(q, n, words);
    auto dmin = min_distance(Metric::Hamming, check);
    if (dmin && *dmin < n - mu) throw DomainError("minimum distance below mu*q - mu");

    // Classes: words at distance n from each other.
    std::vector<int> cls(words.size(), -1);
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = static_cast<int>(classes.size());
        classes.push_back({static_cast<int>(i)});
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (cls[j] < 0 && distance(Metric::Hamming, q, words[i], words[j]) == n) {
                cls[j] = cls[i];
                classes.back().push_back(static_cast<int>(j));
            }
        if (static_cast<int>(classes.back().size()) != q) throw DomainError("code does not split into classes of q words");
    }

    SymmetricNet net;
    net.mu = mu;
    net.q = q;
    const int N = mu * q * q;
    net.incidence.assign(N, std::vector<std::uint8_t>(N, 0));
    int row = 0;
    for (const auto& c : classes) {
        std::vector<int> pc;
        for (int idx : c) {
            for (int i = 0; i < n; ++i) net.incidence[row][i * q + words[idx][i]] = 1;
            pc.push_back(row++);
        }
        net.point_classes.push_back(pc);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<int> bc;
        for (int a = 0; a < q; ++a) bc.push_back(i * q + a);
        net.block_classes.push_back(bc);
    }
    return net;
}

SymmetricNet net_from_code(const Code& c) { return net_from_words(c.q(), c.words()); }

Code code_from_net(const SymmetricNet& net) {
    const int N = net.size(), n = net.mu * net.q;
    std::vector<Word> words;
    for (int r = 0; r < N; ++r) {
        Word w(n, -1);
        for (int col = 0; col < N; ++col) {
            if (!net.incidence[r][col]) continue;
            int i = col / net.q;
            if (w[i] >= 0) throw DomainError("row meets a block class twice");
            w[i] = col % net.q;
        }
        if (std::find(w.begin(), w.end(), -1) != w.end()) throw DomainError("row misses a block class");
        words.push_back(std::move(w));
    }
    return Code(net.q, n, std::move(words));
}

NetCheck check_net(const SymmetricNet& net) {
    NetCheck r;
    const int q = net.q, mu = net.mu, N = net.size(), nb = mu * q;
    const auto& M = net.incidence;
    r.shape = N > 0 && static_cast<int>(M.size()) == N &&
              std::all_of(M.begin(), M.end(), [&](const auto& row) { return static_cast<int>(row.size()) == N; }) &&
              static_cast<int>(net.point_classes.size()) == nb && static_cast<int>(net.block_classes.size()) == nb;
    if (!r.shape) return r;

    r.permutation_blocks = true;
    for (int bi = 0; bi < nb; ++bi)
        for (int bj = 0; bj < nb; ++bj)
            for (int k = 0; k < q; ++k) {
                int rs = 0, cs = 0;
                for (int l = 0; l < q; ++l) {
                    rs += M[bi * q + k][bj * q + l];
                    cs += M[bi * q + l][bj * q + k];
                }
                if (rs != 1 || cs != 1) r.permutation_blocks = false;
            }

    auto col_inter = [&](int a, int b) {
        int s = 0;
        for (int p = 0; p < N; ++p) s += M[p][a] & M[p][b];
        return s;
    };
    auto row_inter = [&](int a, int b) {
        int s = 0;
        for (int k = 0; k < N; ++k) s += M[a][k] & M[b][k];
        return s;
    };

    std::vector<int> bclass(N, -1), pclass(N, -1);
    bool parts_ok = true;
    for (int k = 0; k < nb; ++k) {
        for (int c : net.block_classes[k]) {
            if (c < 0 || c >= N || bclass[c] >= 0) parts_ok = false;
            else bclass[c] = k;
        }
        for (int p : net.point_classes[k]) {
            if (p < 0 || p >= N || pclass[p] >= 0 || net.point_classes[k].size() != static_cast<std::size_t>(q))
                parts_ok = false;
            else pclass[p] = k;
        }
    }
    parts_ok = parts_ok && std::count(bclass.begin(), bclass.end(), -1) == 0 &&
               std::count(pclass.begin(), pclass.end(), -1) == 0;

    // (s1) each block class partitions the points.
    r.s1 = parts_ok;
    for (int k = 0; k < nb && r.s1; ++k)
        for (int p = 0; p < N; ++p) {
            int hits = 0;
            for (int c : net.block_classes[k]) hits += M[p][c];
            if (hits != 1) r.s1 = false;
        }
    // (s2) blocks from different classes meet in mu points; every block has mu*q points.
    r.s2 = parts_ok;
    for (int a = 0; a < N && r.s2; ++a) {
        if (col_inter(a, a) != mu * q) r.s2 = false;
        for (int b = a + 1; b < N && r.s2; ++b)
            if (bclass[a] != bclass[b] && col_inter(a, b) != mu) r.s2 = false;
    }
    // (s3) points: mu blocks in common across classes, none within a class.
    r.s3 = parts_ok;
    for (int a = 0; a < N && r.s3; ++a)
        for (int b = a + 1; b < N && r.s3; ++b)
            if (row_inter(a, b) != (pclass[a] == pclass[b] ? 0 : mu)) r.s3 = false;

    r.gram = true;
    for (int a = 0; a < N && r.gram; ++a)
        for (int b = 0; b < N && r.gram; ++b) {
            int want = (a / q == b / q) ? (a == b ? mu * q : 0) : mu;
            if (row_inter(a, b) != want || col_inter(a, b) != want) r.gram = false;
        }
    return r;
}

std::vector<Word> net_example_words() {
    std::vector<Word> out;
    for (const char* s : {"000", "111", "222", "021", "102", "210", "012", "120", "201"}) out.push_back(bits_word(s));
    return out;
}

std::vector<std::vector<std::uint8_t>> net_example_incidence() {
    const char* rows[] = {"100100100", "010010010", "001001001", "100001010", "010100001",
                          "001010100", "100010001", "010001100", "001100010"};
    std::vector<std::vector<std::uint8_t>> m;
    for (const char* r : rows) {
        std::vector<std::uint8_t> v;
        for (const char* p = r; *p; ++p) v.push_back(static_cast<std::uint8_t>(*p - '0'));
        m.push_back(v);
    }
    return m;
}

} // namespace cb
