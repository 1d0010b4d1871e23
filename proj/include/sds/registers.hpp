#pragma once

#include <functional>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sds/zmseq.hpp"

namespace sds {

using bigint = boost::multiprecision::cpp_int;

/// A feedback shift register of the given order over Z_m.  The feedback must
/// make the state map a permutation; fsr_cycles rejects it otherwise.
struct RegisterSpec {
    int modulus = 2;
    int order = 1;
    std::function<digit(const digits& state)> feedback;
};

/// The (m-)CCR_n: feedback x_1 + r with gcd(r, m) = 1.
RegisterSpec ccr(int modulus, int order, int r = 1);

/// Cycle decomposition of the state space; each cycle as the canonical output
/// sequence at its full cycle length.  Guard: m^n <= 10^7.
std::set<CyclicSeq> fsr_cycles(const RegisterSpec& spec);

/// Z*(n) = (1/2n) sum over odd d|n of phi(d) 2^{n/d}.
bigint count_ccr_formula(int n);

/// Cycle count of the m-CCR_n: (1/mn) sum over d|n with gcd(d,m)=1 of
/// phi(d) m^{n/d}.  Specializes to Z*(n) at m=2.
bigint count_mccr_formula(int m, int n);

/// |enumerate_sds(m, n)|.
long long sd_count(int m, int n);

struct CountReport {
    int modulus = 2;
    int order = 0;
    bigint total = 0;
    std::map<long, bigint> by_period;
    std::string source;  // "formula" or "brute"

    std::string to_text() const;
};

struct IdentityReport {
    int order = 0;
    bigint lhs = 0;  // |fsr_cycles(CCR_n)|
    bigint rhs = 0;  // sum of SD(d) over d|2n, d not dividing n
    std::map<long, long long> terms;
    bool pass = false;

    std::string to_text() const;
};

/// Z*(n) = sum over d|2n, d!|n of SD(d), both sides by brute force.
IdentityReport verify_count_identity(int n);

struct MccrIdentityReport {
    int modulus = 2;
    int order = 0;
    bigint cycle_count = 0;
    bigint paper_sum = 0;  // over {d : d|mn, d!|n, m|d, d | n - d/m}
    bigint plain_sum = 0;  // over {d : d|mn, d!|n}
    bool paper_matches = false;
    bool plain_matches = false;

    std::string to_text() const;
};

/// Compares the brute-force cycle count of the m-CCR_n against two candidate
/// divisor-set sums of SD_m(d); reports which (if either) matches.
MccrIdentityReport verify_mccr_identity(int m, int n);

/// Period buckets of the CCR_n, n = 2^i p: 2^{2^i-i-1} cycles of period
/// 2^{i+1} and (2^{2^i p} - 2^{2^i}) / (2^{i+1} p) cycles of period 2^{i+1}p.
CountReport count_ccr_by_period(int i, int p);

/// Binary cyclic sequences of length 2^{n_exp+1} annihilated by D^{2^{n_exp}+1}
/// but not by D^{2^{n_exp}}.  Guard: 2^{n_exp+1} <= 24.
std::set<CyclicSeq> kernel_poly_cycles(int n_exp);

}  // namespace sds
