#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sds/registers.hpp"
#include "sds/zmseq.hpp"

namespace sds {

/// An ordered list of P distinct words of length n over Z_m claimed to be a
/// single-track Gray code.
struct Stgc {
    int modulus = 2;
    int length = 1;
    std::vector<Word> rows;

    std::size_t period() const { return rows.size(); }
};

struct StgcReport {
    bool distinct = false;
    bool gray = false;
    bool single_track = false;
    bool binary_divisibility = true;  // only meaningful for m = 2
    bool coverage = false;            // every coordinate toggled by some pair
    std::vector<long> column_shifts;
    long period_mod_mn = 0;
    std::string first_violation;

    bool pass() const { return distinct && gray && single_track && binary_divisibility && coverage; }
    std::string to_text() const;
};

StgcReport verify_stgc(const Stgc& code);

/// F^j S: the length-n window of S starting at offset j (cyclic).
Word window_F(const CyclicSeq& s, long j, int n);

/// The input contract of the window constructions: r aligned self-dual
/// sequences of length m*n plus the wraparound shift offset ell.
struct SdsOrdering {
    int modulus = 2;
    std::vector<CyclicSeq> seqs;
    long ell = 1;
};

/// Rows E^{k ell} S_i from r aligned full-period sequences with
/// single-coordinate consecutive differences; period n*r.
Stgc construct_thm3(const std::vector<CyclicSeq>& seqs, long ell);

/// Binary window construction: rows F^{k ell} S_i, period 2nr.
Stgc construct_thm4(const SdsOrdering& ordering);

/// Z_m window construction (consecutive sequences differ in exactly m
/// coordinates): rows F^{k ell} S_i, period mnr.
Stgc construct_thm7(const SdsOrdering& ordering);

/// A length-m word of consecutive window differences, summing to 1 mod m.
struct DiffSeq {
    int modulus = 2;
    digits elems;
};

/// The unique SDS of length m^2 whose determining window has the given
/// differences (window reconstructed by running sum, extended by the
/// m-CCR_m rule).
CyclicSeq diff_to_sds(const DiffSeq& d);

struct DiffConstruction {
    int modulus = 2;
    std::vector<DiffSeq> diffs;  // ordered as used, one per rotation class
    SdsOrdering ordering;
    Stgc code;
};

/// Length-m, period-m^m code from the m^{m-2} difference classes.  m = 4 is
/// seeded with the published arrangement; m = 3, 5 use the ordering search.
DiffConstruction build_diff_construction(int m);
Stgc build_diff_stgc(int m);

/// Maximum period code of length p^t and period p^{p^t} over Z_p.  t = 1 is
/// the difference construction; t > 1 merges the prime-p recursion components
/// through a backtracking ordering over determining windows.
Stgc build_recursive_stgc(int p, int t);

/// Exhaustive ordering search over all full-period binary necklaces of
/// length p; returns a verified period 2^p - 2 code or nothing.
std::optional<Stgc> search_thm3_max_period(int p);

bool is_max_period(int m, int n, const bigint& P);

// --- STGC file format ------------------------------------------------------
// "STGC m=<m> n=<n> P=<P>" header, then P lines of n digits.

void write_stgc(std::ostream& out, const Stgc& code);
Stgc read_stgc(std::istream& in);

}  // namespace sds
