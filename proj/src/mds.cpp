#include "bsym/mds.hpp"

#include <algorithm>

#include "bsym/bweight.hpp"

namespace bsym {

namespace {

long long binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long acc = 1;
    for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return acc;
}

bool next_subset(std::vector<int>& J, int n) {
    int r = (int)J.size();
    for (int i = r - 1; i >= 0; --i) {
        if (J[i] < n - r + i) {
            ++J[i];
            for (int j = i + 1; j < r; ++j) J[j] = J[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

MdsVerdict is_b_mds_direct(const LinearCode& C, int b, const Caps& caps) {
    const int n = C.n(), k = C.k();
    if (b < 1 || b > n) throw DomainError("window length out of range");
    MdsVerdict v;
    v.criterion = MdsCriterion::Direct;
    v.bound = std::min<long long>(n - k + b, n);
    CodewordSeq seq(C, caps);
    std::vector<int> msg, word;
    seq.next(msg, word);  // skip zero
    long long best = n;
    while (seq.next(msg, word)) {
        int w = b_weight_vector(word, b);
        if (w < v.bound && !v.witness_codeword) v.witness_codeword = word;
        best = std::min<long long>(best, w);
    }
    v.is_mds = best == v.bound;
    return v;
}

MdsVerdict is_b_mds_generator(const LinearCode& C, int b, const Caps& caps) {
    const int n = C.n(), k = C.k();
    if (b < 1 || b > n) throw DomainError("window length out of range");
    MdsVerdict v;
    v.criterion = MdsCriterion::Generator;
    v.bound = std::min<long long>(n - k + b, n);
    int size = std::max(k - b, 0) + 1;
    if (size > n) throw InvariantViolation("index set larger than n");
    if (binom(n, size) > caps.max_subspaces) throw CapExceeded("subset enumeration too large");
    std::vector<int> J(size);
    for (int i = 0; i < size; ++i) J[i] = i;
    v.is_mds = true;
    do {
        std::vector<int> win = window_set(J, n, b, /*backward=*/false);
        if (rank_of(select_columns(C.generator(), win)) != k) {
            v.is_mds = false;
            v.witness_set = J;
            break;
        }
    } while (next_subset(J, n));
    return v;
}

MdsVerdict is_b_mds_parity(const LinearCode& C, int b, const Caps& caps) {
    const int n = C.n(), k = C.k();
    if (b < 1 || b > n) throw DomainError("window length out of range");
    MdsVerdict v;
    v.criterion = MdsCriterion::Parity;
    v.bound = std::min<long long>(n - k + b, n);
    if (k == n) {
        // no parity rows; the full space meets the bound for every b
        v.is_mds = true;
        return v;
    }
    const long long limit = v.bound - 1;  // max allowed |J[-b]|, hence max useful |J|
    v.is_mds = true;
    long long scan_total = 0;
    for (int size = 1; size <= limit && v.is_mds; ++size) {
        scan_total += binom(n, size);
        if (scan_total > caps.max_subspaces) throw CapExceeded("subset enumeration too large");
        std::vector<int> J(size);
        for (int i = 0; i < size; ++i) J[i] = i;
        do {
            if ((long long)window_set(J, n, b, /*backward=*/true).size() > limit) continue;
            if (rank_of(select_columns(C.check(), J)) != size) {
                v.is_mds = false;
                v.witness_set = J;
                break;
            }
        } while (next_subset(J, n));
    }
    return v;
}

bool mds_length_bound(const LinearCode& C, int b) {
    if (b < 1 || b > C.k() - 1) throw DomainError("criterion requires 1 <= b <= k-1");
    return C.n() <= gaussian_binomial(C.field().q(), 1, C.k());
}

int mds_ladder(const LinearCode& C, const Caps& caps) {
    for (int b = 1; b <= C.n(); ++b)
        if (is_b_mds_direct(C, b, caps).is_mds) return b;
    throw InvariantViolation("no window length qualifies, but b = n always must");
}

}  // namespace bsym
