#include "bsym/families.hpp"

#include <algorithm>

namespace bsym {

namespace {

// All vectors of F_q^k in lexicographic order (first coordinate most
// significant), filtered by `keep`, as columns.
template <typename Keep>
FqMatrix columns_in_lex_order(const Field& f, int k, long long expected_cols, Keep keep) {
    const long long q = f.q();
    FqMatrix m(f, k, (int)expected_cols);
    std::vector<int> v(k, 0);
    long long col = 0;
    for (;;) {
        if (keep(v)) {
            if (col >= expected_cols) throw InvariantViolation("column count overflow");
            for (int i = 0; i < k; ++i) m.set(i, (int)col, v[i]);
            ++col;
        }
        int t = k - 1;
        while (t >= 0 && v[t] == q - 1) v[t--] = 0;
        if (t < 0) break;
        ++v[t];
    }
    if (col != expected_cols) throw InvariantViolation("column count mismatch");
    return m;
}

}  // namespace

FqMatrix projective_column_matrix(const Field& f, int k, const Caps& caps) {
    if (k < 1) throw DomainError("k must be positive");
    long long n = gaussian_binomial(f.q(), 1, k);
    if (n > caps.max_subspaces) throw CapExceeded("enumeration too large");
    return columns_in_lex_order(f, k, n, [](const std::vector<int>& v) {
        for (int x : v) {
            if (x == 1) return true;
            if (x != 0) return false;
        }
        return false;  // zero vector
    });
}

FqMatrix full_column_matrix(const Field& f, int k, const Caps& caps) {
    if (k < 1) throw DomainError("k must be positive");
    auto total = pow_checked(f.q(), k, caps.max_codewords);
    if (!total) throw CapExceeded("enumeration too large");
    return columns_in_lex_order(f, k, *total, [](const std::vector<int>&) { return true; });
}

LinearCode simplex_code(const Field& f, int k, const Caps& caps) {
    return LinearCode::from_generator(projective_column_matrix(f, k, caps));
}

LinearCode hamming_code(const Field& f, int k, const Caps& caps) {
    return LinearCode::from_parity(projective_column_matrix(f, k, caps));
}

long long simplex_d(long long q, int k, int i, int j) {
    if (k < 1 || j < 1 || j > k) throw DomainError("rank out of range");
    long long n = gaussian_binomial(q, 1, k);
    if (i < 1 || i > n) throw DomainError("window length out of range");
    long long qk = 1, qkj = 1;
    for (int t = 0; t < k; ++t) qk *= q;
    for (int t = 0; t < k - j; ++t) qkj *= q;
    return std::min((qk - qkj) / (q - 1) + i - 1, n);
}

}  // namespace bsym
