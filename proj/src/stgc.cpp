#include "sds/stgc.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "sds/examples_data.hpp"
#include "sds/operators.hpp"

namespace sds {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

// Find k with pattern = rotate_left(text, k), or -1.  KMP over text+text.
long find_rotation_shift(const digits& text, const digits& pattern) {
    const std::size_t p = pattern.size();
    if (text.size() != p)
        return -1;
    std::vector<std::size_t> fail(p, 0);
    for (std::size_t i = 1; i < p; ++i) {
        std::size_t j = fail[i - 1];
        while (j > 0 && pattern[i] != pattern[j])
            j = fail[j - 1];
        if (pattern[i] == pattern[j])
            ++j;
        fail[i] = j;
    }
    std::size_t j = 0;
    for (std::size_t i = 0; i < 2 * p; ++i) {
        digit c = text[i % p];
        while (j > 0 && c != pattern[j])
            j = fail[j - 1];
        if (c == pattern[j])
            ++j;
        if (j == p)
            return static_cast<long>(i + 1 - p);
    }
    return -1;
}

// Words of length n over Z_m encoded big-endian in base m, with the orbit
// structure used by the ordering searches.  The orbit map is either the plain
// rotation (Theorem-3 necklaces) or the shift-with-increment map whose orbits
// are the determining windows of the structured self-dual sequences.
struct WordSpace {
    int m = 2;
    int n = 1;
    bool structured = false;
    long long count = 1;  // m^n
    long long msb = 1;    // m^{n-1}
    long long order = 1;  // order of the step map: m*n structured, n plain
    std::vector<std::int32_t> orbit_of;  // -1 = excluded from the universe
    int orbit_count = 0;

    WordSpace(int m_, int n_, bool structured_) : m(m_), n(n_), structured(structured_) {
        count = ipow(m, n);
        msb = count / m;
        order = structured ? static_cast<long long>(m) * n : n;
        orbit_of.assign(count, -1);
        for (long long w = 0; w < count; ++w) {
            if (orbit_of[w] != -1)
                continue;
            std::vector<long long> orbit;
            long long cur = w;
            do {
                orbit.push_back(cur);
                cur = step(cur);
            } while (cur != w);
            bool keep = structured ? true : static_cast<long long>(orbit.size()) == order;
            if (keep) {
                for (long long o : orbit)
                    orbit_of[o] = orbit_count;
                ++orbit_count;
            } else {
                for (long long o : orbit)
                    orbit_of[o] = -2;
            }
        }
        for (long long w = 0; w < count; ++w)
            if (orbit_of[w] == -2)
                orbit_of[w] = -1;
    }

    long long step(long long w) const {
        long long head = w / msb;
        if (structured)
            head = (head + 1) % m;
        return (w % msb) * m + head;
    }

    long long step_pow(long long w, long long k) const {
        for (long long i = 0; i < k; ++i)
            w = step(w);
        return w;
    }

    digits decode(long long w) const {
        digits d(n);
        for (int i = n - 1; i >= 0; --i) {
            d[i] = static_cast<digit>(w % m);
            w /= m;
        }
        return d;
    }

    int hamming_words(long long a, long long b) const {
        int h = 0;
        while (a != 0 || b != 0) {
            if (a % m != b % m)
                ++h;
            a /= m;
            b /= m;
        }
        return h;
    }

    void neighbors(long long w, std::vector<long long>& out) const {
        out.clear();
        long long pw = 1;
        for (int i = n - 1; i >= 0; --i) {
            long long cur = (w / pw) % m;
            long long base = w - cur * pw;
            for (int v = 0; v < m; ++v)
                if (v != cur)
                    out.push_back(base + v * pw);
            pw *= m;
        }
    }
};

unsigned long long mix64(unsigned long long x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct OrderingResult {
    std::vector<long long> path;
    long ell = 0;
};

// Backtracking search for an ordering of orbit representatives in which
// consecutive words differ in exactly one coordinate and the last word closes
// onto step^ell of the first for some ell relatively prime to the map order.
class OrbitOrderingSearch {
public:
    OrbitOrderingSearch(const WordSpace& ws, long long budget_per_attempt, int attempts = 64)
        : ws_(ws), budget_(budget_per_attempt), attempts_(attempts) {}

    std::optional<OrderingResult> run(long long start) {
        if (ws_.orbit_of[start] < 0)
            throw error("ordering search: start word not in the universe");
        targets_.clear();
        for (long long l = 1; l < ws_.order; ++l)
            if (std::gcd(l, ws_.order) == 1) {
                long long t = ws_.step_pow(start, l);
                if (!targets_.count(t))
                    targets_[t] = static_cast<long>(l);
            }
        exhausted_ = false;
        // Attempt 0: Warnsdorff-guided depth-first search.  If it finishes
        // within budget without a solution the space is exhausted and no
        // ordering exists.  Otherwise fall back to rotation-extension passes
        // with per-attempt tie-breaking salts; the schedule is fixed, so the
        // result is deterministic: first attempt that completes wins.
        for (int attempt = 0; attempt < attempts_; ++attempt) {
            salt_ = 0x9e3779b97f4a7c15ULL * static_cast<unsigned long long>(attempt);
            used_.assign(ws_.orbit_count, 0);
            path_.clear();
            nodes_ = 0;
            bool found = attempt == 0 ? dfs(start) : posa(start);
            if (found)
                return OrderingResult{path_, ell_};
            if (attempt == 0 && nodes_ <= budget_)
                return std::nullopt;  // search space genuinely exhausted
            exhausted_ = true;
        }
        return std::nullopt;
    }

    bool budget_exhausted() const { return exhausted_; }

private:
    bool dfs(long long cur) {
        path_.push_back(cur);
        used_[ws_.orbit_of[cur]] = 1;
        if (path_.size() == static_cast<std::size_t>(ws_.orbit_count)) {
            long best = -1;
            for (const auto& [w, l] : targets_)
                if (ws_.hamming_words(cur, w) == 1 && (best == -1 || l < best))
                    best = l;
            if (best != -1) {
                ell_ = best;
                return true;
            }
        } else if (++nodes_ <= budget_) {
            std::vector<long long> nbrs;
            ws_.neighbors(cur, nbrs);
            std::vector<std::pair<int, long long>> cands;
            std::vector<long long> onward;
            for (long long nb : nbrs) {
                int o = ws_.orbit_of[nb];
                if (o < 0 || used_[o])
                    continue;
                ws_.neighbors(nb, onward);
                int deg = 0;
                for (long long x : onward) {
                    int ox = ws_.orbit_of[x];
                    if (ox >= 0 && !used_[ox] && ox != o)
                        ++deg;
                }
                cands.emplace_back(deg, nb);
            }
            if (salt_ != 0)
                for (auto& [deg, nb] : cands)
                    deg = deg * 16 + static_cast<int>(mix64(static_cast<unsigned long long>(nb) ^ salt_) & 15);
            std::sort(cands.begin(), cands.end());
            for (const auto& [deg, nb] : cands)
                if (dfs(nb))
                    return true;
        } else {
            exhausted_ = true;
        }
        used_[ws_.orbit_of[cur]] = 0;
        path_.pop_back();
        return false;
    }

    // Rotation-extension pass: grow the path greedily; when stuck, reverse a
    // tail segment at an in-path neighbor of the endpoint to expose a new
    // endpoint (the start stays fixed, which the closure condition needs).
    bool posa(long long start) {
        std::vector<int> pos(ws_.count, -1);
        path_.push_back(start);
        pos[start] = 0;
        used_[ws_.orbit_of[start]] = 1;
        unsigned long long rng = salt_ | 1;
        std::vector<long long> nbrs, onward;
        const std::size_t want = static_cast<std::size_t>(ws_.orbit_count);

        for (long long steps = 0; steps <= budget_; ++steps) {
            long long w = path_.back();
            if (path_.size() == want) {
                long best = -1;
                for (const auto& [tw, l] : targets_)
                    if (ws_.hamming_words(w, tw) == 1 && (best == -1 || l < best))
                        best = l;
                if (best != -1) {
                    ell_ = best;
                    return true;
                }
            }
            ws_.neighbors(w, nbrs);
            if (path_.size() < want) {
                long long pick = -1;
                unsigned long long pick_key = ~0ULL;
                for (long long nb : nbrs) {
                    int o = ws_.orbit_of[nb];
                    if (o < 0 || used_[o])
                        continue;
                    ws_.neighbors(nb, onward);
                    unsigned long long deg = 0;
                    for (long long x : onward) {
                        int ox = ws_.orbit_of[x];
                        if (ox >= 0 && !used_[ox] && ox != o)
                            ++deg;
                    }
                    unsigned long long key =
                        (deg << 32) | (mix64(static_cast<unsigned long long>(nb) ^ rng) & 0xffffffffULL);
                    if (pick == -1 || key < pick_key) {
                        pick = nb;
                        pick_key = key;
                    }
                }
                if (pick != -1) {
                    pos[pick] = static_cast<int>(path_.size());
                    path_.push_back(pick);
                    used_[ws_.orbit_of[pick]] = 1;
                    continue;
                }
            }
            // Stuck (or closed-path check failed): rotate.
            rng = mix64(rng + static_cast<unsigned long long>(steps));
            long long pivot = -1;
            unsigned long long pivot_key = ~0ULL;
            for (long long nb : nbrs) {
                int pi = pos[nb];
                if (pi < 0 || pi + 2 >= static_cast<int>(path_.size()))
                    continue;  // not in path, or reversal would be a no-op
                unsigned long long key = mix64(static_cast<unsigned long long>(nb) ^ rng);
                if (key < pivot_key) {
                    pivot = pi;
                    pivot_key = key;
                }
            }
            if (pivot == -1)
                return false;
            std::size_t a = static_cast<std::size_t>(pivot) + 1, b = path_.size() - 1;
            while (a < b) {
                std::swap(path_[a], path_[b]);
                pos[path_[a]] = static_cast<int>(a);
                pos[path_[b]] = static_cast<int>(b);
                ++a;
                --b;
            }
        }
        return false;
    }

    const WordSpace& ws_;
    long long budget_;
    int attempts_;
    unsigned long long salt_ = 0;
    std::map<long long, long> targets_;
    std::vector<char> used_;
    std::vector<long long> path_;
    long long nodes_ = 0;
    long ell_ = 0;
    bool exhausted_ = false;
};

// Extend a determining window to the full structured sequence of length m*n
// (each block is the previous one plus 1).
CyclicSeq structured_sds_from_window(int m, const digits& window) {
    const std::size_t n = window.size();
    CyclicSeq s{m, digits(m * n)};
    for (int b = 0; b < m; ++b)
        for (std::size_t i = 0; i < n; ++i)
            s.elems[b * n + i] = static_cast<digit>((window[i] + b) % m);
    return s;
}

Word aligned_word(const CyclicSeq& s) { return Word{s.modulus, s.elems}; }

Stgc construct_window_code(const SdsOrdering& o, const char* who) {
    const std::string name(who);
    if (o.seqs.empty())
        throw error(name + ": empty ordering");
    const int m = o.modulus;
    const std::size_t len = o.seqs[0].length();
    if (len % m != 0)
        throw error(name + ": sequence length must be a multiple of the modulus");
    const int n = static_cast<int>(len) / m;
    const std::size_t r = o.seqs.size();

    std::set<CyclicSeq> classes;
    for (std::size_t i = 0; i < r; ++i) {
        const CyclicSeq& s = o.seqs[i];
        if (s.modulus != m || s.length() != len)
            throw error(name + ": sequence " + std::to_string(i) + " has mismatched shape");
        if (!is_self_dual(s))
            throw error(name + ": sequence " + std::to_string(i) + " is not self-dual");
        if (period(s) != static_cast<int>(len))
            throw error(name + ": sequence " + std::to_string(i) + " is not full period");
        if (!classes.insert(canonical(s)).second)
            throw error(name + ": sequence " + std::to_string(i) +
                        " repeats an earlier rotation class");
    }
    for (std::size_t i = 0; i + 1 < r; ++i)
        if (hamming(aligned_word(o.seqs[i]), aligned_word(o.seqs[i + 1])) != m)
            throw error(name + ": sequences " + std::to_string(i) + " and " +
                        std::to_string(i + 1) + " do not differ in exactly " +
                        std::to_string(m) + " coordinates");
    if (std::gcd(o.ell, static_cast<long>(len)) != 1)
        throw error(name + ": ell is not relatively prime to the sequence length");
    if (hamming(aligned_word(o.seqs[r - 1]), aligned_word(shift(o.seqs[0], o.ell))) != m)
        throw error(name + ": wraparound pair does not differ in exactly " +
                    std::to_string(m) + " coordinates");

    Stgc code;
    code.modulus = m;
    code.length = n;
    code.rows.reserve(len * r);
    for (std::size_t k = 0; k < len; ++k)
        for (std::size_t i = 0; i < r; ++i)
            code.rows.push_back(window_F(o.seqs[i], static_cast<long>(k) * o.ell, n));
    StgcReport rep = verify_stgc(code);
    if (!rep.pass())
        throw error(name + ": constructed code failed verification: " + rep.first_violation);
    return code;
}

}  // namespace

std::string StgcReport::to_text() const {
    std::ostringstream os;
    os << "distinct=" << (distinct ? "pass" : "FAIL") << " gray=" << (gray ? "pass" : "FAIL")
       << " single_track=" << (single_track ? "pass" : "FAIL")
       << " binary_divisibility=" << (binary_divisibility ? "pass" : "FAIL")
       << " coverage=" << (coverage ? "pass" : "FAIL");
    os << " period_mod_mn=" << period_mod_mn;
    if (!first_violation.empty())
        os << " first_violation=\"" << first_violation << "\"";
    os << "\ncolumn_shifts=[";
    for (std::size_t i = 0; i < column_shifts.size(); ++i)
        os << (i ? "," : "") << column_shifts[i];
    os << "]\n" << (pass() ? "PASS" : "FAIL");
    return os.str();
}

StgcReport verify_stgc(const Stgc& code) {
    StgcReport rep;
    const std::size_t P = code.rows.size();
    const int n = code.length;
    const int m = code.modulus;
    if (P == 0)
        throw error("verify_stgc: empty code");
    for (const Word& w : code.rows)
        if (w.modulus != m || w.length() != static_cast<std::size_t>(n))
            throw error("verify_stgc: malformed row");

    // distinctness
    std::vector<Word> sorted = code.rows;
    std::sort(sorted.begin(), sorted.end());
    rep.distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!rep.distinct)
        rep.first_violation = "repeated row " + to_string(*std::adjacent_find(sorted.begin(), sorted.end()));

    // Gray property and coordinate coverage
    rep.gray = true;
    std::vector<char> cov(n, 0);
    for (std::size_t t = 0; t < P; ++t) {
        const Word& a = code.rows[t];
        const Word& b = code.rows[(t + 1) % P];
        int d = 0, pos = -1;
        for (int c = 0; c < n; ++c)
            if (a.elems[c] != b.elems[c]) {
                ++d;
                pos = c;
            }
        if (d != 1) {
            if (rep.gray && rep.first_violation.empty())
                rep.first_violation = "rows " + std::to_string(t) + "/" +
                                      std::to_string((t + 1) % P) + " differ in " +
                                      std::to_string(d) + " coordinates";
            rep.gray = false;
        } else {
            cov[pos] = 1;
        }
    }
    rep.coverage = rep.gray && std::all_of(cov.begin(), cov.end(), [](char c) { return c != 0; });
    if (rep.gray && !rep.coverage && rep.first_violation.empty())
        rep.first_violation = "some coordinate is never changed";

    // single track
    rep.single_track = true;
    digits col0(P);
    for (std::size_t t = 0; t < P; ++t)
        col0[t] = code.rows[t].elems[0];
    digits colc(P);
    for (int c = 0; c < n; ++c) {
        for (std::size_t t = 0; t < P; ++t)
            colc[t] = code.rows[t].elems[c];
        long k = find_rotation_shift(col0, colc);
        if (k < 0) {
            rep.single_track = false;
            if (rep.first_violation.empty())
                rep.first_violation = "column " + std::to_string(c) +
                                      " is not a cyclic shift of column 0";
            break;
        }
        rep.column_shifts.push_back(k);
    }

    rep.period_mod_mn = static_cast<long>(P % (static_cast<std::size_t>(m) * n));
    if (m == 2) {
        rep.binary_divisibility = P % (2 * static_cast<std::size_t>(n)) == 0;
        if (!rep.binary_divisibility && rep.first_violation.empty())
            rep.first_violation = "2n does not divide P";
    }
    return rep;
}

Word window_F(const CyclicSeq& s, long j, int n) {
    if (n < 1 || static_cast<std::size_t>(n) > s.length())
        throw error("window_F: window longer than the sequence");
    const long len = static_cast<long>(s.length());
    long r = ((j % len) + len) % len;
    Word out{s.modulus, digits(n)};
    for (int i = 0; i < n; ++i)
        out.elems[i] = s.elems[(r + i) % len];
    return out;
}

Stgc construct_thm3(const std::vector<CyclicSeq>& seqs, long ell) {
    if (seqs.empty())
        throw error("construct_thm3: empty sequence list");
    const int m = seqs[0].modulus;
    const std::size_t n = seqs[0].length();
    const std::size_t r = seqs.size();

    std::set<CyclicSeq> classes;
    for (std::size_t i = 0; i < r; ++i) {
        const CyclicSeq& s = seqs[i];
        if (s.modulus != m || s.length() != n)
            throw error("construct_thm3: sequence " + std::to_string(i) + " has mismatched shape");
        if (period(s) != static_cast<int>(n))
            throw error("construct_thm3: sequence " + std::to_string(i) + " is not full period");
        if (!classes.insert(canonical(s)).second)
            throw error("construct_thm3: sequence " + std::to_string(i) +
                        " repeats an earlier rotation class");
    }
    for (std::size_t i = 0; i + 1 < r; ++i)
        if (hamming(aligned_word(seqs[i]), aligned_word(seqs[i + 1])) != 1)
            throw error("construct_thm3: sequences " + std::to_string(i) + " and " +
                        std::to_string(i + 1) + " do not differ in exactly one coordinate");
    if (std::gcd(ell, static_cast<long>(n)) != 1)
        throw error("construct_thm3: ell is not relatively prime to n");
    if (hamming(aligned_word(seqs[r - 1]), aligned_word(shift(seqs[0], ell))) != 1)
        throw error("construct_thm3: wraparound pair does not differ in exactly one coordinate");

    Stgc code;
    code.modulus = m;
    code.length = static_cast<int>(n);
    code.rows.reserve(n * r);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < r; ++i)
            code.rows.push_back(aligned_word(shift(seqs[i], static_cast<long>(k) * ell)));
    StgcReport rep = verify_stgc(code);
    if (!rep.pass())
        throw error("construct_thm3: constructed code failed verification: " + rep.first_violation);
    return code;
}

Stgc construct_thm4(const SdsOrdering& ordering) {
    if (ordering.modulus != 2)
        throw error("construct_thm4: binary construction requires m = 2");
    return construct_window_code(ordering, "construct_thm4");
}

Stgc construct_thm7(const SdsOrdering& ordering) {
    return construct_window_code(ordering, "construct_thm7");
}

CyclicSeq diff_to_sds(const DiffSeq& d) {
    const int m = d.modulus;
    if (d.elems.size() != static_cast<std::size_t>(m))
        throw error("diff_to_sds: need m differences");
    int sum = 0;
    for (digit x : d.elems)
        sum = (sum + x) % m;
    if (sum != 1)
        throw error("diff_to_sds: differences must sum to 1 mod m");
    digits window(m);
    window[0] = 0;
    for (int i = 1; i < m; ++i)
        window[i] = static_cast<digit>((window[i - 1] + d.elems[i - 1]) % m);
    return structured_sds_from_window(m, window);
}

DiffConstruction build_diff_construction(int m) {
    if (m < 3 || m > 5)
        throw error("build_diff_construction: guard 3 <= m <= 5");
    DiffConstruction out;
    out.modulus = m;

    std::vector<digits> windows;  // aligned determining windows, in code order
    long ell = 0;

    if (m == 4) {
        // Seeded with the published arrangement of the 16 difference classes
        // and the published alignment of the sequences they determine.
        const auto& fx = fixtures::example4();
        const std::size_t r = fx.diff_rows[0].size();
        for (std::size_t j = 0; j < r; ++j) {
            DiffSeq d{4, digits(4)};
            for (int i = 0; i < 4; ++i)
                d.elems[i] = static_cast<digit>(fx.diff_rows[i][j] - '0');
            out.diffs.push_back(d);
        }
        for (std::size_t j = 0; j < r; ++j) {
            digits w(4);
            for (int i = 0; i < 4; ++i)
                w[i] = static_cast<digit>(fx.sds_rows[i][j] - '0');
            for (int i = 0; i < 4; ++i) {
                digit want = out.diffs[j].elems[i];
                digit got = static_cast<digit>(
                    ((i + 1 < 4 ? w[i + 1] : (w[0] + 1) % 4) - w[i] + 4) % 4);
                if (got != want)
                    throw error("build_diff_construction: seed tables disagree at column " +
                                std::to_string(j));
            }
            windows.push_back(w);
        }
        WordSpace ws(4, 4, true);
        long long last = 0, first = 0;
        for (int i = 0; i < 4; ++i) {
            last = last * 4 + windows.back()[i];
            first = first * 4 + windows.front()[i];
        }
        for (long l = 1; l < 16 && ell == 0; ++l)
            if (std::gcd(l, 16L) == 1 && ws.hamming_words(last, ws.step_pow(first, l)) == 1)
                ell = l;
        if (ell == 0)
            throw error("build_diff_construction: no wraparound shift for the seed table");
    } else {
        WordSpace ws(m, m, true);
        OrbitOrderingSearch search(ws, 2'000'000);
        auto res = search.run(0);
        if (!res)
            throw error("build_diff_construction: ordering search failed for m=" +
                        std::to_string(m) +
                        (search.budget_exhausted() ? " (budget exhausted)" : " (no ordering)"));
        for (long long w : res->path)
            windows.push_back(ws.decode(w));
        ell = res->ell;
        for (const digits& w : windows) {
            DiffSeq d{m, digits(m)};
            for (int i = 0; i + 1 < m; ++i)
                d.elems[i] = static_cast<digit>((w[i + 1] - w[i] + m) % m);
            d.elems[m - 1] = static_cast<digit>((w[0] + 1 - w[m - 1] + 2 * m) % m);
            out.diffs.push_back(d);
        }
    }

    out.ordering.modulus = m;
    out.ordering.ell = ell;
    for (const digits& w : windows)
        out.ordering.seqs.push_back(structured_sds_from_window(m, w));
    out.code = construct_thm7(out.ordering);
    return out;
}

Stgc build_diff_stgc(int m) { return build_diff_construction(m).code; }

Stgc build_recursive_stgc(int p, int t) {
    if ((p != 3 && p != 5) || t < 1)
        throw error("build_recursive_stgc: need p in {3, 5} and t >= 1");
    bigint period = 1;
    long long n = ipow(p, t);
    for (long long i = 0; i < n; ++i)
        period *= p;
    if (period > 1'000'000)
        throw error("build_recursive_stgc: period p^{p^t} exceeds the desk guard");
    if (t == 1)
        return build_diff_stgc(p);

    // The level-(t-1) components (fixed choices of the recursion's free
    // words) appear here as the fibers of the determining windows over their
    // leading blocks; the merge is the single-coordinate ordering search.
    WordSpace ws(p, static_cast<int>(n), true);
    OrbitOrderingSearch search(ws, 4'000'000);
    auto res = search.run(0);
    if (!res)
        throw error(std::string("build_recursive_stgc: component merge failed") +
                    (search.budget_exhausted() ? " (budget exhausted)" : " (no ordering)"));

    SdsOrdering ordering;
    ordering.modulus = p;
    ordering.ell = res->ell;
    for (long long w : res->path)
        ordering.seqs.push_back(structured_sds_from_window(p, ws.decode(w)));
    return construct_thm7(ordering);
}

std::optional<Stgc> search_thm3_max_period(int p) {
    if (p != 3 && p != 5 && p != 7)
        throw error("search_thm3_max_period: guard p in {3, 5, 7}");
    WordSpace ws(2, p, false);
    OrbitOrderingSearch search(ws, 50'000'000);
    auto res = search.run(1);  // 0...01, the least full-period word
    if (!res)
        return std::nullopt;
    std::vector<CyclicSeq> seqs;
    for (long long w : res->path)
        seqs.push_back(CyclicSeq{2, ws.decode(w)});
    return construct_thm3(seqs, res->ell);
}

bool is_max_period(int m, int n, const bigint& P) {
    if (m == 2) {
        bigint full = 1;
        full <<= n;
        return P % (2 * n) == 0 && full - P < 2 * n;
    }
    bigint full = 1;
    for (int i = 0; i < n; ++i)
        full *= m;
    return P == full;
}

void write_stgc(std::ostream& out, const Stgc& code) {
    out << "STGC m=" << code.modulus << " n=" << code.length << " P=" << code.rows.size() << "\n";
    for (const Word& w : code.rows)
        out << to_string(w) << "\n";
}

Stgc read_stgc(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw error("read_stgc: missing header");
    int m = 0, n = 0;
    long long P = 0;
    if (std::sscanf(header.c_str(), "STGC m=%d n=%d P=%lld", &m, &n, &P) != 3)
        throw error("read_stgc: bad header: " + header);
    Stgc code;
    code.modulus = m;
    code.length = n;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty())
            continue;
        code.rows.push_back(word_from_string(m, line));
        if (code.rows.back().length() != static_cast<std::size_t>(n))
            throw error("read_stgc: row length mismatch");
    }
    if (static_cast<long long>(code.rows.size()) != P)
        throw error("read_stgc: row count does not match the header");
    return code;
}

}  // namespace sds
