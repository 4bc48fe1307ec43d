#pragma once

// Shared fixtures. The Fano plane and the 4-cycle show up everywhere: the
// plane is the smallest exact linear regular instance, the 4-cycle the
// smallest 1-disjointed one.

#include <vector>

#include "lincnf/formula.hpp"

namespace fixtures {

inline lincnf::Formula chain_pair() {
    // m=3, n=5: a 2-clause chain plus a disjoint edge.
    return lincnf::build_formula({{1, 2}, {2, 3}, {4, 5}});
}

inline lincnf::Formula fano() {
    return lincnf::build_formula({{1, 2, 3},
                                  {1, 4, 5},
                                  {1, 6, 7},
                                  {2, 4, 6},
                                  {2, 5, 7},
                                  {3, 4, 7},
                                  {3, 5, 6}});
}

inline lincnf::Formula four_cycle() {
    return lincnf::build_formula({{1, 2}, {3, 4}, {1, 3}, {2, 4}});
}

inline lincnf::Formula blocks_3x2() {
    return lincnf::build_formula({{1, 2}, {3, 4}, {5, 6}});
}

inline lincnf::Formula triangle() {
    return lincnf::build_formula({{1, 2}, {2, 3}, {1, 3}});
}

}  // namespace fixtures
