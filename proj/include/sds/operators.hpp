#pragma once

#include <vector>

#include "sds/zmseq.hpp"

namespace sds {

enum class PreimageKind { single_period, sds_doubled, family };

struct PreimageResult {
    PreimageKind kind = PreimageKind::family;
    std::vector<CyclicSeq> sequences;
    int parameter_arity = 0;  // number of free choices consumed
};

/// D = E - 1: elementwise cyclic forward difference mod m.
CyclicSeq apply_D(const CyclicSeq& s);

/// Running-sum preimages of s under D.  With s = sum(S) mod m and
/// e = m / gcd(s, m): e = 1 gives the m length-k preimages; e > 1 gives the
/// length e*k preimage whose blocks are offset by s each pass.
PreimageResult apply_D_inv(const CyclicSeq& s);

CyclicSeq apply_D_pow(const CyclicSeq& s, int r);

/// r-fold inverse; intermediate levels take the zero-leading representative,
/// the final level returns the full family.
PreimageResult apply_D_inv_pow(const CyclicSeq& s, int r);

/// Blockwise cyclic difference X_{i+1} - X_i with the given block length
/// (m = 2 reduces to the blockwise sum).
CyclicSeq delta(const CyclicSeq& s, int block_len);

/// Blockwise running sum started at Y.  If the blockwise sum Z of s is zero
/// the output has the same length; otherwise the run is repeated e times with
/// offset Z, where e is the additive order of Z (e = 2 in the binary case).
CyclicSeq delta_inv(const CyclicSeq& s, int block_len, const Word& y);

/// Theorem-5 step: from the SDS cycles of the CCR_n (materialized at length
/// 2n) to the complete SDS cycle set of the CCR_{2n}.
std::set<CyclicSeq> recurse_ccr_sds(const std::set<CyclicSeq>& sds_set, int n);

/// [V, V+1, V+2] with V = (Z, Z+Y, Z+2Y+X) over Z_3.
CyclicSeq z3_recursion(const Word& x, const Word& z, const Word& y);

/// [V, V+1, ..., V+4] with V per the Z_5 block expression.
CyclicSeq z5_recursion(const Word& x, const Word& z, const Word& y1, const Word& y2,
                       const Word& y3);

/// Prime-p recursion: block j of V is Z + sum_k C(j,k) U_k with
/// U = (Y_{p-2}, ..., Y_1, X) and binomials mod p.  Specializes to the
/// Z_3 / Z_5 expressions at p = 3 and p = 5.
CyclicSeq general_p_recursion(int p, const Word& x, const Word& z,
                              const std::vector<Word>& ys);

struct PascalRows {
    int prime = 2;
    std::vector<std::vector<int>> rows;  // rows 0..p-1 of C(r, j) mod p
};

PascalRows pascal_rows(int p);

bool is_prime(int p);

}  // namespace sds
