#pragma once

#include <string>
#include <vector>

// Embedded reference tables for the worked examples, so the `examples`
// pipeline runs offline and the fixtures are shared between the CLI and the
// test suites.

namespace sds::fixtures {

// Example 1: the four blockwise preimages of [000111], the two preimages of
// [01] materialized at length 6, and the two period-8 sequences reached at
// the next level.
const std::vector<std::string>& example1_delta3inv_000111();
const std::string& example1_dinv01_period12();
const std::string& example1_dinv01_period4();
const std::vector<std::string>& example1_period8_sds();

struct Example3Data {
    std::vector<std::string> sds;         // three length-9 sequences over Z_3
    long ell;                             // wraparound shift offset
    std::vector<std::string> left_block;  // 9 rows of 3 digits
    std::vector<std::string> wide_block;  // 9 rows of 27 digits
};
const Example3Data& example3();

struct Example4Data {
    std::vector<std::string> diff_rows;  // 4 rows of 16 digits
    std::vector<std::string> sds_rows;   // 16 rows of 16 digits
};
const Example4Data& example4();

}  // namespace sds::fixtures
