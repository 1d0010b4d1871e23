#include "sds/zmseq.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sds {

namespace {

digits digits_from_string(int modulus, std::string_view text) {
    if (modulus < 2 || modulus > 10)
        throw error("modulus must be in [2, 10]");
    digits out;
    out.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9')
            throw error(std::string("bad digit character '") + c + "'");
        int v = c - '0';
        if (v >= modulus)
            throw error("digit " + std::to_string(v) + " out of range for Z_" +
                        std::to_string(modulus));
        out.push_back(static_cast<digit>(v));
    }
    if (out.empty())
        throw error("empty sequence literal");
    return out;
}

std::string string_from_digits(const digits& elems) {
    std::string s;
    s.reserve(elems.size());
    for (digit d : elems)
        s.push_back(static_cast<char>('0' + d));
    return s;
}

// Booth's least-rotation index.
std::size_t least_rotation(const digits& s) {
    const std::size_t n = s.size();
    std::vector<long> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        digit sj = s[j % n];
        long i = f[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n])
                k = j - i - 1;
            i = f[i];
        }
        if (sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n])
                k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k;
}

}  // namespace

CyclicSeq seq_from_string(int modulus, std::string_view text) {
    CyclicSeq s{modulus, digits_from_string(modulus, text)};
    return s;
}

Word word_from_string(int modulus, std::string_view text) {
    return Word{modulus, digits_from_string(modulus, text)};
}

std::string to_string(const CyclicSeq& s) { return string_from_digits(s.elems); }
std::string to_string(const Word& w) { return string_from_digits(w.elems); }

CyclicSeq shift(const CyclicSeq& s, long k) {
    const long n = static_cast<long>(s.length());
    long r = ((k % n) + n) % n;
    CyclicSeq out{s.modulus, digits(s.elems.size())};
    for (long i = 0; i < n; ++i)
        out.elems[i] = s.elems[(i + r) % n];
    return out;
}

int period(const CyclicSeq& s) {
    const int n = static_cast<int>(s.length());
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        bool ok = true;
        for (int i = d; i < n && ok; ++i)
            ok = s.elems[i] == s.elems[i - d];
        if (ok)
            return d;
    }
    return n;  // unreachable
}

CyclicSeq add_const(const CyclicSeq& s, int c) {
    CyclicSeq out = s;
    const int m = s.modulus;
    int cc = ((c % m) + m) % m;
    for (digit& d : out.elems)
        d = static_cast<digit>((d + cc) % m);
    return out;
}

Word add_const(const Word& w, int c) {
    Word out = w;
    const int m = w.modulus;
    int cc = ((c % m) + m) % m;
    for (digit& d : out.elems)
        d = static_cast<digit>((d + cc) % m);
    return out;
}

bool is_self_dual(const CyclicSeq& s) {
    return canonical(add_const(s, 1)).elems == canonical(s).elems;
}

CyclicSeq canonical(const CyclicSeq& s) {
    return shift(s, static_cast<long>(least_rotation(s.elems)));
}

int hamming(const Word& a, const Word& b) {
    if (a.length() != b.length())
        throw error("hamming: length mismatch");
    if (a.modulus != b.modulus)
        throw error("hamming: modulus mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.length(); ++i)
        d += a.elems[i] != b.elems[i];
    return d;
}

CyclicSeq materialize(const CyclicSeq& s, std::size_t len) {
    if (len % s.length() != 0)
        throw error("materialize: target length not a multiple of sequence length");
    CyclicSeq out{s.modulus, digits()};
    out.elems.reserve(len);
    while (out.elems.size() < len)
        out.elems.insert(out.elems.end(), s.elems.begin(), s.elems.end());
    return out;
}

CyclicSeq reduce_to_period(const CyclicSeq& s) {
    int d = period(s);
    return CyclicSeq{s.modulus, digits(s.elems.begin(), s.elems.begin() + d)};
}

long long enumerate_sds_cost(int m, int n) {
    long long cost = 0;
    for (int j = 1; j < n; ++j) {
        int g = std::gcd(j, n);
        if ((n / g) % m != 0)
            continue;
        long long cand = 1;
        for (int i = 0; i < g; ++i) {
            cand *= m;
            if (cand > (1LL << 62) / m)
                return cand;  // already far beyond any guard
        }
        cost += cand;
    }
    return cost;
}

std::set<CyclicSeq> enumerate_sds(int m, int n) {
    if (m < 2 || n < 1)
        throw error("enumerate_sds: bad parameters");
    constexpr long long kGuard = 10'000'000;
    if (enumerate_sds_cost(m, n) > kGuard)
        throw error("enumerate_sds: size guard exceeded for m=" + std::to_string(m) +
                    " n=" + std::to_string(n));

    std::set<CyclicSeq> out;
    // A self-dual S of period n satisfies E^j S = S + 1 for some 0 < j < n.
    // Digits are constant-plus-increment along the orbits of i -> i+j (mod n);
    // the orbit closes only when m divides n/gcd(j,n).
    for (int j = 1; j < n; ++j) {
        int g = std::gcd(j, n);
        if ((n / g) % m != 0)
            continue;
        long long total = 1;
        for (int i = 0; i < g; ++i)
            total *= m;
        digits seed(g, 0);
        CyclicSeq s{m, digits(n, 0)};
        for (long long idx = 0; idx < total; ++idx) {
            long long v = idx;
            for (int i = 0; i < g; ++i) {
                seed[i] = static_cast<digit>(v % m);
                v /= m;
            }
            for (int o = 0; o < g; ++o) {
                int pos = o;
                int val = seed[o];
                for (int step = 0; step < n / g; ++step) {
                    s.elems[pos] = static_cast<digit>(val);
                    pos = (pos + j) % n;
                    val = (val + 1) % m;
                }
            }
            if (period(s) == n)
                out.insert(canonical(s));
        }
    }
    return out;
}

std::vector<CyclicSeq> read_sequences(std::istream& in, int default_modulus) {
    std::vector<CyclicSeq> out;
    int m = default_modulus;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty())
            continue;
        if (line[0] == '#') {
            auto pos = line.find("m=");
            if (pos != std::string::npos)
                m = std::stoi(line.substr(pos + 2));
            continue;
        }
        out.push_back(seq_from_string(m, line));
    }
    return out;
}

void write_sequences(std::ostream& out, const std::vector<CyclicSeq>& seqs, int modulus) {
    out << "# m=" << modulus << "\n";
    for (const auto& s : seqs) {
        if (s.modulus != modulus)
            throw error("write_sequences: mixed moduli");
        out << to_string(s) << "\n";
    }
}

}  // namespace sds
