#include "mm/refdata.hpp"

namespace mm {

const std::vector<CMTableRow>& cm_table() {
    static const std::vector<CMTableRow> rows = {
        {{2, -2, 1}, 1, 1, -1.0000, 0},
        {{4, 0, 1}, 1, 1, 0.50000, 0},
        {{8, -4, 1}, 1, 1, 2.0000, 0},
        {{16, 16, 5}, 1, 2, -32.970, 0},
        {{16, 0, 1}, 1, 2, 0.97056, 0},
        {{1, 0, 1}, 1, 2, 0.029437, 0},
        {{5, -4, 1}, 1, 2, 33.970, 0},
        {{4, -4, 5}, 1, 4, -0.030330, 0},
        {{20, -4, 1}, 1, 4, 1.03033, 0},
        {{8, 8, 3}, 1, 2, -4.8284, 0},
        {{8, 0, 1}, 1, 2, 0.82842, 0},
        {{2, 0, 1}, 1, 2, 0.17157, 0},
        {{6, 4, 1}, 1, 2, 5.8284, 0},
        {{4, 4, 3}, 1, 4, -0.20710, 0},
        {{12, 4, 1}, 1, 4, 1.20710, 0},
        {{3, 3, 1}, 1, 2, -13.928, 0},
        {{1, 1, 1}, 1, 2, -0.071796, 0},
        {{16, 4, 1}, 1, 2, 1.07179, 0},
        {{16, 12, 3}, 1, 2, 14.928, 0},
        {{4, 0, 3}, 1, 4, 0.066987, 0},
        {{12, 0, 1}, 1, 4, 0.93301, 0},
        {{4, 2, 1}, 1, 1, 0.50000, -0.86602},
        {{4, -2, 1}, 1, 1, 0.50000, 0.86602},
        {{7, 7, 2}, 1, 2, -253.99, 0},
        {{1, 1, 2}, 1, 2, -0.0039370, 0},
        {{32, 4, 1}, 1, 2, 1.0039, 0},
        {{32, 28, 7}, 1, 2, 254.99, 0},
        {{4, 0, 7}, 1, 4, 0.0039216, 0},
        {{28, 0, 1}, 1, 4, 0.99607, 0},
        {{2, 1, 1}, 1, 1, 0.031250, -0.24803},
        {{2, -1, 1}, 1, 1, 0.031250, 0.24803},
        {{4, 3, 1}, 1, 1, 0.50000, -3.9686},
        {{4, -3, 1}, 1, 1, 0.50000, 3.9686},
        {{8, 2, 1}, 1, 1, 0.96875, -0.24803},
        {{8, -2, 1}, 1, 1, 0.96875, 0.24803},
        {{4, -1, 1}, 2, 4, 0.50000, 0.30096},
        {{4, 1, 1}, 2, 4, 0.50000, -0.30096},
        {{8, 7, 2}, 2, 4, 0.50000, -27.411},
        {{8, -7, 2}, 2, 4, 0.50000, 27.411},
        {{2, 1, 2}, 2, 4, 0.00066519, -0.036468},
        {{2, -1, 2}, 2, 4, 0.00066519, 0.036468},
        {{6, 3, 1}, 2, 4, 1.4680, -0.88368},
        {{6, -3, 1}, 2, 4, 1.4680, 0.88368},
        {{8, 6, 3}, 2, 4, -0.46808, -0.88368},
        {{8, -6, 3}, 2, 4, -0.46808, 0.88368},
        {{16, 2, 1}, 2, 4, 0.99933, -0.036468},
        {{16, -2, 1}, 2, 4, 0.99933, 0.036468},
    };
    return rows;
}

const std::vector<long>& class_number_one_discs() {
    static const std::vector<long> v = {-3,  -4,  -7,  -8,  -11, -12, -16,
                                        -19, -27, -28, -43, -67, -163};
    return v;
}

const std::vector<long>& class_number_two_discs() {
    static const std::vector<long> v = {
        -15, -20, -24, -32, -35,  -36,  -40,  -48,  -51,  -52,  -60,  -64,  -72,  -75, -88,
        -91, -99, -100, -112, -115, -123, -147, -148, -187, -232, -235, -267, -403, -427};
    return v;
}

}  // namespace mm
