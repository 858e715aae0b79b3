#pragma once

#include "pmds/classify.hpp"

// Small reference codes reused across the suite.
namespace fixtures {

// [6,3,2; 1,1] code over GF(3), one global parity.
inline pmds::MatrixGF gf3_code() {
    return pmds::MatrixGF(pmds::Field::prime(3), 3, 6,
                          {1, 0, 1, 0, 1, 1,
                           0, 1, 2, 0, 1, 1,
                           0, 0, 0, 1, 1, 2});
}

inline pmds::PmdsParams gf3_params() { return pmds::PmdsParams::make(2, 2, {1, 1}, 3); }

// [9,5,3; 2,1] code over GF(4), one global parity. 2 encodes the generator
// of GF(4)* and 3 its square.
inline pmds::MatrixGF gf4_code() {
    return pmds::MatrixGF(pmds::Field::binary_ext(2), 5, 9,
                          {1, 0, 0, 1, 1, 0, 0, 1, 1,
                           0, 1, 0, 3, 2, 0, 0, 1, 1,
                           0, 0, 1, 2, 3, 0, 0, 1, 1,
                           0, 0, 0, 0, 0, 1, 0, 1, 2,
                           0, 0, 0, 0, 0, 0, 1, 1, 3});
}

inline pmds::PmdsParams gf4_params() { return pmds::PmdsParams::make(2, 3, {2, 1}, 5); }

// [8,4,3; 1,1] code over GF(7) with two global parities.
inline pmds::MatrixGF gf7_code() {
    return pmds::MatrixGF(pmds::Field::prime(7), 4, 8,
                          {1, 0, 0, 1, 0, 1, 2, 2,
                           0, 1, 0, 4, 0, 1, 3, 6,
                           0, 0, 1, 6, 0, 1, 4, 3,
                           0, 0, 0, 0, 1, 1, 5, 1});
}

inline pmds::PmdsParams gf7_params() { return pmds::PmdsParams::make(2, 3, {1, 1}, 4); }

// The same shape as gf7_code with seven entries left open; it admits no
// completion into a code with these parameters.
inline pmds::TemplateMatrix gf7_template() {
    pmds::MatrixGF base(pmds::Field::prime(7), 4, 8,
                        {1, 0, 0, 0, 0, 1, 1, 0,
                         0, 1, 0, 0, 0, 1, 2, 0,
                         0, 0, 1, 0, 0, 1, 3, 0,
                         0, 0, 0, 0, 1, 1, 4, 0});
    return pmds::TemplateMatrix{
        base, {{0, 3}, {0, 7}, {1, 3}, {1, 7}, {2, 3}, {2, 7}, {3, 7}}};
}

}  // namespace fixtures
