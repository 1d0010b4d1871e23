#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sds {

using digit = std::uint8_t;
using digits = std::vector<digit>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sequence over Z_m regarded up to rotation.  The stored alignment is
/// significant: coordinatewise comparisons (Hamming distances between aligned
/// self-dual sequences) are done on the representation as stored.
struct CyclicSeq {
    int modulus = 2;
    digits elems;

    std::size_t length() const { return elems.size(); }
    auto operator<=>(const CyclicSeq&) const = default;
};

/// A fixed-length, non-cyclic word over Z_m.
struct Word {
    int modulus = 2;
    digits elems;

    std::size_t length() const { return elems.size(); }
    auto operator<=>(const Word&) const = default;
};

CyclicSeq seq_from_string(int modulus, std::string_view text);
Word word_from_string(int modulus, std::string_view text);
std::string to_string(const CyclicSeq& s);
std::string to_string(const Word& w);

/// E^k: cyclic left shift by k (k may be negative or exceed the length).
CyclicSeq shift(const CyclicSeq& s, long k);

/// Length of the shortest word whose repetition gives s.
int period(const CyclicSeq& s);

/// Add c (mod m) to every element.
CyclicSeq add_const(const CyclicSeq& s, int c);
Word add_const(const Word& w, int c);

/// True iff s+1 is a rotation of s.
bool is_self_dual(const CyclicSeq& s);

/// Lexicographically least rotation (Booth's algorithm).
CyclicSeq canonical(const CyclicSeq& s);

/// Number of coordinates in which a and b differ.  Lengths and moduli must match.
int hamming(const Word& a, const Word& b);

/// Repeat s to the given length, which must be a multiple of length(s).
CyclicSeq materialize(const CyclicSeq& s, std::size_t len);

/// Shorten s to its period.
CyclicSeq reduce_to_period(const CyclicSeq& s);

/// All rotation classes of self-dual sequences of period exactly n over Z_m,
/// as canonical representatives.  Works through the structural decomposition
/// E^j S = S + 1; the work guard bounds the candidate count, not m^n.
std::set<CyclicSeq> enumerate_sds(int m, int n);

/// Test-friendly candidate-count estimate used by the enumerate_sds guard.
long long enumerate_sds_cost(int m, int n);

// --- shared sequence text format ------------------------------------------
// One sequence per line, digits '0'..'9' (m <= 10), optional "# m=<m>" header.

std::vector<CyclicSeq> read_sequences(std::istream& in, int default_modulus = 2);
void write_sequences(std::ostream& out, const std::vector<CyclicSeq>& seqs, int modulus);

}  // namespace sds
