#pragma once

// Change-of-group Gysin triangles on Borel cohomology. For a pair L < K with
// K/L a sphere of dimension n + 1 the sequence
//   M_K^{t-n-1} --e--> M_K^t --p*--> M_L^t --> M_K^{t-n} --e--> M_K^{t+1}
// is exact. The third map is never built; its existence is certified by
// rank bookkeeping.

#include <string>
#include <vector>

#include "swf/borel.hpp"
#include "swf/verdict.hpp"

namespace swf {

struct GysinType {
    int type;
    GroupTag k;
    GroupTag l;
    int n;
    std::string_view euler;  // "q", "q^2", "Q", "0"
};

const GysinType& gysin_type(int type);  // type in 1..4

struct GysinTriangle {
    GysinType type;
    int level = 0;
    int sigma = 0;  // degree from which both modules are periodic
    GradedModule mk;
    GradedModule ml;
    std::vector<gf2::Matrix> euler;        // [d]: M_K^d -> M_K^{d+n+1}, d + n + 1 <= hi
    std::vector<gf2::Matrix> restriction;  // [t]: M_K^t -> M_L^t
};

GysinTriangle build_gysin(const BorelSuite& suite, int type);
GysinTriangle build_gysin(const SwfComplex& c, int type, int max_degree);

// Verdicts: exactness at M_K, the rank count at the other two positions,
// high-degree normalization, and the restriction relations.
std::vector<Verdict> verify_exactness(const GysinTriangle& t);

}  // namespace swf
