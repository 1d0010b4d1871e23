#include "sds/operators.hpp"

#include <algorithm>
#include <numeric>

namespace sds {

namespace {

int additive_order(const digits& z, int m) {
    int e = 1;
    for (digit d : z)
        e = std::lcm(e, m / std::gcd(static_cast<int>(d), m));
    return e;
}

}  // namespace

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

CyclicSeq apply_D(const CyclicSeq& s) {
    const int m = s.modulus;
    const std::size_t n = s.length();
    CyclicSeq out{m, digits(n)};
    for (std::size_t i = 0; i < n; ++i)
        out.elems[i] = static_cast<digit>((s.elems[(i + 1) % n] - s.elems[i] + m) % m);
    return out;
}

PreimageResult apply_D_inv(const CyclicSeq& s) {
    const int m = s.modulus;
    const std::size_t k = s.length();
    int total = 0;
    for (digit d : s.elems)
        total = (total + d) % m;
    const int e = m / std::gcd(total, m);

    PreimageResult res;
    res.parameter_arity = 1;  // the leading element of the running sum
    if (e == 1) {
        for (int a = 0; a < m; ++a) {
            CyclicSeq t{m, digits(k)};
            int acc = a;
            for (std::size_t i = 0; i < k; ++i) {
                t.elems[i] = static_cast<digit>(acc);
                acc = (acc + s.elems[i]) % m;
            }
            res.sequences.push_back(std::move(t));
        }
        res.kind = m == 2 ? PreimageKind::single_period : PreimageKind::family;
    } else {
        CyclicSeq t{m, digits(e * k)};
        int acc = 0;
        for (std::size_t i = 0; i < t.length(); ++i) {
            t.elems[i] = static_cast<digit>(acc);
            acc = (acc + s.elems[i % k]) % m;
        }
        res.sequences.push_back(std::move(t));
        res.kind = e == m ? PreimageKind::sds_doubled : PreimageKind::family;
    }
    return res;
}

CyclicSeq apply_D_pow(const CyclicSeq& s, int r) {
    if (r < 1)
        throw error("apply_D_pow: power must be >= 1");
    CyclicSeq out = s;
    for (int i = 0; i < r; ++i)
        out = apply_D(out);
    return out;
}

PreimageResult apply_D_inv_pow(const CyclicSeq& s, int r) {
    if (r < 1)
        throw error("apply_D_inv_pow: power must be >= 1");
    CyclicSeq cur = s;
    for (int level = 1; level < r; ++level) {
        PreimageResult step = apply_D_inv(cur);
        auto it = std::find_if(step.sequences.begin(), step.sequences.end(),
                               [](const CyclicSeq& t) { return t.elems[0] == 0; });
        cur = *it;  // the zero-leading representative always exists
    }
    PreimageResult res = apply_D_inv(cur);
    res.parameter_arity = r;
    return res;
}

CyclicSeq delta(const CyclicSeq& s, int block_len) {
    const int m = s.modulus;
    if (block_len < 1 || s.length() % block_len != 0)
        throw error("delta: block length does not divide sequence length");
    const std::size_t n = s.length();
    CyclicSeq out{m, digits(n)};
    for (std::size_t i = 0; i < n; ++i)
        out.elems[i] = static_cast<digit>((s.elems[(i + block_len) % n] - s.elems[i] + m) % m);
    return out;
}

CyclicSeq delta_inv(const CyclicSeq& s, int block_len, const Word& y) {
    const int m = s.modulus;
    if (block_len < 1 || s.length() % block_len != 0)
        throw error("delta_inv: block length does not divide sequence length");
    if (y.modulus != m || static_cast<int>(y.length()) != block_len)
        throw error("delta_inv: Y must be a length-block_len word over the same alphabet");
    const std::size_t r = s.length() / block_len;

    digits z(block_len, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (int j = 0; j < block_len; ++j)
            z[j] = static_cast<digit>((z[j] + s.elems[i * block_len + j]) % m);
    const int e = additive_order(z, m);

    CyclicSeq out{m, digits(e * s.length())};
    digits acc = y.elems;
    for (std::size_t b = 0; b < e * r; ++b) {
        std::copy(acc.begin(), acc.end(), out.elems.begin() + b * block_len);
        for (int j = 0; j < block_len; ++j)
            acc[j] = static_cast<digit>((acc[j] + s.elems[(b % r) * block_len + j]) % m);
    }
    return out;
}

std::set<CyclicSeq> recurse_ccr_sds(const std::set<CyclicSeq>& sds_set, int n) {
    std::set<CyclicSeq> out;
    for (const CyclicSeq& s : sds_set) {
        if (s.modulus != 2 || s.length() != static_cast<std::size_t>(2 * n))
            throw error("recurse_ccr_sds: inputs must be binary cycles materialized at length 2n");
        if (!is_self_dual(s))
            throw error("recurse_ccr_sds: input is not self-dual: " + to_string(s));
        for (long long bits = 0; bits < (1LL << n); ++bits) {
            Word y{2, digits(n)};
            for (int i = 0; i < n; ++i)
                y.elems[i] = static_cast<digit>((bits >> i) & 1);
            out.insert(canonical(delta_inv(s, n, y)));
        }
    }
    return out;
}

CyclicSeq general_p_recursion(int p, const Word& x, const Word& z,
                              const std::vector<Word>& ys) {
    if (!is_prime(p))
        throw error("general_p_recursion: p must be prime");
    if (static_cast<int>(ys.size()) != p - 2)
        throw error("general_p_recursion: expected p-2 free words");
    const std::size_t len = x.length();
    auto check = [&](const Word& w, const char* what) {
        if (w.modulus != p || w.length() != len)
            throw error(std::string("general_p_recursion: ") + what +
                        " must have the source length over Z_p");
    };
    check(z, "Z");
    for (const Word& y : ys)
        check(y, "each Y");
    if (z.elems[0] != 0)
        throw error("general_p_recursion: Z must start with zero");

    // U_1..U_{p-2} are the free words in reverse order, U_{p-1} is X; block j
    // of V is Z + sum_{k<=j} C(j,k) U_k mod p.
    std::vector<const digits*> u;
    for (int k = 1; k <= p - 2; ++k)
        u.push_back(&ys[p - 2 - k].elems);
    u.push_back(&x.elems);
    PascalRows pas = pascal_rows(p);

    digits v;
    v.reserve(p * len);
    for (int j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < len; ++i) {
            int val = z.elems[i];
            for (int k = 1; k <= j; ++k)
                val += pas.rows[j][k] * (*u[k - 1])[i];
            v.push_back(static_cast<digit>(val % p));
        }
    }

    CyclicSeq out{p, digits()};
    out.elems.reserve(p * v.size());
    for (int c = 0; c < p; ++c)
        for (digit d : v)
            out.elems.push_back(static_cast<digit>((d + c) % p));
    return out;
}

CyclicSeq z3_recursion(const Word& x, const Word& z, const Word& y) {
    return general_p_recursion(3, x, z, {y});
}

CyclicSeq z5_recursion(const Word& x, const Word& z, const Word& y1, const Word& y2,
                       const Word& y3) {
    return general_p_recursion(5, x, z, {y1, y2, y3});
}

PascalRows pascal_rows(int p) {
    if (!is_prime(p))
        throw error("pascal_rows: p must be prime");
    if (p > 23)
        throw error("pascal_rows: guard p <= 23 exceeded");
    PascalRows out;
    out.prime = p;
    out.rows.resize(p);
    for (int r = 0; r < p; ++r) {
        out.rows[r].resize(r + 1);
        out.rows[r][0] = 1;
        out.rows[r][r] = 1;
        for (int j = 1; j < r; ++j)
            out.rows[r][j] = (out.rows[r - 1][j - 1] + out.rows[r - 1][j]) % p;
    }
    return out;
}

}  // namespace sds
