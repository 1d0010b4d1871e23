#include "sds/examples_data.hpp"

namespace sds::fixtures {

const std::vector<std::string>& example1_delta3inv_000111() {
    static const std::vector<std::string> v = {
        "000000111111",
        "001001110110",
        "010010101101",
        "011011100100",
    };
    return v;
}

const std::string& example1_dinv01_period12() {
    static const std::string s = "000010111101";
    return s;
}

const std::string& example1_dinv01_period4() {
    static const std::string s = "0011";
    return s;
}

const std::vector<std::string>& example1_period8_sds() {
    static const std::vector<std::string> v = {"00001111", "00101101"};
    return v;
}

const Example3Data& example3() {
    static const Example3Data d = {
        {"000111222", "010121202", "110221002"},
        4,
        {"001", "011", "000", "112", "122", "111", "220", "200", "222"},
        {
            "001122222112200000220011111",
            "011111001122222112200000220",
            "000220011111001122222112200",
            "112200000220011111001122222",
            "122222112200000220011111001",
            "111001122222112200000220011",
            "220011111001122222112200000",
            "200000220011111001122222112",
            "222112200000220011111001122",
        },
    };
    return d;
}

const Example4Data& example4() {
    static const Example4Data d = {
        {
            "0012232331111100",
            "1111001120021123",
            "0222333322130332",
            "0210033222333000",
        },
        {
            "0032211000000000",
            "0000003331111100",
            "1111000011132223",
            "1333333333222111",
            "1103322111111111",
            "1111110002222211",
            "2222111122203330",
            "2000000000333222",
            "2210033222222222",
            "2222221113333322",
            "3333222233310001",
            "3111111111000333",
            "3321100333333333",
            "3333332220000033",
            "0000333300021112",
            "0222222222111000",
        },
    };
    return d;
}

}  // namespace sds::fixtures
