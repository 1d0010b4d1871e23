#pragma once

// Naive reference implementations used to cross-check the library.  These
// deliberately avoid the library's own algorithms: rotation minima by direct
// comparison over all rotations, enumeration by full exhaustion of m^n
// sequences.

#include <set>
#include <vector>

#include "sds/zmseq.hpp"

namespace oracle {

inline sds::digits rotate_left(const sds::digits& v, std::size_t k) {
    sds::digits out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(v[(i + k) % v.size()]);
    return out;
}

inline sds::digits min_rotation(const sds::digits& v) {
    sds::digits best = v;
    for (std::size_t k = 1; k < v.size(); ++k) {
        sds::digits r = rotate_left(v, k);
        if (r < best)
            best = r;
    }
    return best;
}

inline int naive_period(const sds::digits& v) {
    for (std::size_t d = 1; d < v.size(); ++d) {
        if (v.size() % d != 0)
            continue;
        if (rotate_left(v, d) == v)
            return static_cast<int>(d);
    }
    return static_cast<int>(v.size());
}

inline bool naive_self_dual(const sds::digits& v, int m) {
    sds::digits plus = v;
    for (sds::digit& d : plus)
        d = static_cast<sds::digit>((d + 1) % m);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (rotate_left(v, k) == plus)
            return true;
    return false;
}

// Rotation classes of self-dual sequences of period exactly n, by exhausting
// all m^n sequences.  Only usable while m^n stays small.
inline std::set<sds::digits> naive_enumerate_sds(int m, int n) {
    std::set<sds::digits> out;
    sds::digits v(n, 0);
    long long total = 1;
    for (int i = 0; i < n; ++i)
        total *= m;
    for (long long idx = 0; idx < total; ++idx) {
        long long x = idx;
        for (int i = 0; i < n; ++i) {
            v[i] = static_cast<sds::digit>(x % m);
            x /= m;
        }
        if (naive_period(v) == n && naive_self_dual(v, m))
            out.insert(min_rotation(v));
    }
    return out;
}

inline std::set<sds::digits> as_digit_set(const std::set<sds::CyclicSeq>& s) {
    std::set<sds::digits> out;
    for (const auto& c : s)
        out.insert(c.elems);
    return out;
}

}  // namespace oracle
