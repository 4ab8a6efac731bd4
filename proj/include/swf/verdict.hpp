#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace swf {

// Outcome of one property check. The witness is a degree and the support of
// a class (in the computed homology basis) that realizes or refutes it.
struct Verdict {
    std::string name;
    bool pass = false;
    int witness_degree = -1;
    std::vector<std::size_t> witness;
    std::string detail;
};

inline bool all_pass(const std::vector<Verdict>& vs)
{
    for (const auto& v : vs)
        if (!v.pass)
            return false;
    return true;
}

}  // namespace swf
