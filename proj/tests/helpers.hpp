#ifndef BSYM_TEST_HELPERS_HPP
#define BSYM_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "bsym/code.hpp"

namespace bsym::testing {

inline LinearCode random_code(std::mt19937& rng, const Field& f, int n, int k) {
    for (;;) {
        FqMatrix g(f, k, n);
        bool nonzero = false;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) {
                int v = (int)(rng() % f.q());
                g.set(i, j, v);
                nonzero = nonzero || v != 0;
            }
        if (nonzero) return LinearCode::from_generator(g);
    }
}

inline std::vector<int> random_vector(std::mt19937& rng, const Field& f, int n) {
    std::vector<int> v(n);
    for (int& x : v) x = (int)(rng() % f.q());
    return v;
}

}  // namespace bsym::testing

#endif
