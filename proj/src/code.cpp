#include "bsym/code.hpp"

#include <algorithm>

namespace bsym {

LinearCode LinearCode::from_generator(const FqMatrix& g) {
    RrefResult rr = rref(g);
    if (rr.rank == 0) throw DomainError("zero code");
    FqMatrix gen(g.field(), rr.rank, g.cols());
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < g.cols(); ++j) gen.set(i, j, rr.mat.at(i, j));
    FqMatrix check = nullspace_basis(gen);
    return LinearCode(std::move(gen), std::move(check));
}

LinearCode LinearCode::from_parity(const FqMatrix& h) {
    FqMatrix gen = nullspace_basis(h);
    if (gen.rows() == 0) throw DomainError("zero code");
    RrefResult hh = rref(h);
    FqMatrix check(h.field(), hh.rank, h.cols());
    for (int i = 0; i < hh.rank; ++i)
        for (int j = 0; j < h.cols(); ++j) check.set(i, j, hh.mat.at(i, j));
    return LinearCode(std::move(gen), std::move(check));
}

LinearCode LinearCode::dual() const {
    if (k() == n()) throw DomainError("zero dual");
    return LinearCode(check_, gen_);
}

std::optional<long long> gaussian_binomial_checked(long long q, int r, int k) {
    if (q < 2) throw DomainError("q must be at least 2");
    if (r < 0 || k < 0) throw DomainError("negative dimension");
    if (r > k) return 0;
    if (r == 0) return 1;
    // acc after step i is the subspace count for parameters (k-r+i, i),
    // so every division is exact
    unsigned __int128 acc = 1;
    const unsigned __int128 limit = (unsigned __int128)1 << 63;
    for (int i = 1; i <= r; ++i) {
        unsigned __int128 num = 1, den = 1;
        for (int t = 0; t < k - r + i; ++t) {
            num *= (unsigned long long)q;
            if (num > (limit << 10)) return std::nullopt;
        }
        for (int t = 0; t < i; ++t) den *= (unsigned long long)q;
        acc = acc * (num - 1) / (den - 1);
        if (acc >= limit) return std::nullopt;
    }
    return (long long)acc;
}

long long gaussian_binomial(long long q, int r, int k) {
    auto v = gaussian_binomial_checked(q, r, k);
    if (!v) throw CapExceeded("gaussian binomial overflow");
    return *v;
}

std::optional<long long> pow_checked(long long q, int k, long long limit) {
    long long acc = 1;
    for (int i = 0; i < k; ++i) {
        if (acc > limit / q) return std::nullopt;
        acc *= q;
    }
    return acc;
}

namespace {

bool next_combination(std::vector<int>& comb, int n) {
    int r = (int)comb.size();
    for (int i = r - 1; i >= 0; --i) {
        if (comb[i] < n - r + i) {
            ++comb[i];
            for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

void visit_rref_bases(
    const Field& f, int k, int r,
    const std::function<void(const std::vector<std::vector<int>>&,
                             const std::vector<long long>&)>& fn) {
    if (r < 0 || r > k) throw DomainError("dimension out of range");
    const long long q = f.q();
    // lexicographic rank weights per column
    std::vector<long long> colw(k, 1);
    for (int j = k - 2; j >= 0; --j) colw[j] = colw[j + 1] * q;
    if (r == 0) {
        fn({}, {});
        return;
    }
    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i) piv[i] = i;
    std::vector<std::vector<int>> rows(r, std::vector<int>(k, 0));
    std::vector<long long> codes(r, 0);
    do {
        std::vector<char> is_piv(k, 0);
        for (int c : piv) is_piv[c] = 1;
        // free slots in row-major order
        std::vector<std::pair<int, int>> free_slots;
        for (int i = 0; i < r; ++i)
            for (int j = piv[i] + 1; j < k; ++j)
                if (!is_piv[j]) free_slots.emplace_back(i, j);
        for (int i = 0; i < r; ++i) {
            std::fill(rows[i].begin(), rows[i].end(), 0);
            rows[i][piv[i]] = 1;
            codes[i] = colw[piv[i]];
        }
        std::vector<int> v(free_slots.size(), 0);
        for (;;) {
            fn(rows, codes);
            int t = (int)v.size() - 1;
            while (t >= 0 && v[t] == q - 1) {
                auto [ri, rj] = free_slots[t];
                codes[ri] -= colw[rj] * v[t];
                rows[ri][rj] = 0;
                v[t] = 0;
                --t;
            }
            if (t < 0) break;
            auto [ri, rj] = free_slots[t];
            ++v[t];
            rows[ri][rj] = v[t];
            codes[ri] += colw[rj];
        }
    } while (next_combination(piv, k));
}

std::vector<Subspace> enumerate_pg(const Field& f, int ambient, int r, const Caps& caps) {
    if (r < 0 || r > ambient) throw DomainError("dimension out of range");
    auto count = gaussian_binomial_checked(f.q(), r, ambient);
    if (!count || *count > caps.max_subspaces) throw CapExceeded("enumeration too large");
    if (r == 0) return {Subspace::zero(f, ambient)};
    std::vector<Subspace> out;
    out.reserve((size_t)*count);
    visit_rref_bases(f, ambient, r,
                     [&](const std::vector<std::vector<int>>& rows, const std::vector<long long>&) {
                         out.push_back(Subspace::from_canonical(FqMatrix::from_rows(f, rows)));
                     });
    if ((long long)out.size() != *count) throw InvariantViolation("subspace count mismatch");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> pg_ordered(const Field& f, int k, int r, const Caps& caps) {
    if (r < 0 || r > k) throw DomainError("dimension out of range");
    if (2 * r <= k) return enumerate_pg(f, k, r, caps);
    std::vector<Subspace> mirror = pg_ordered(f, k, k - r, caps);
    std::vector<Subspace> out;
    out.reserve(mirror.size());
    for (const Subspace& s : mirror) out.push_back(s.orthocomplement());
    return out;
}

CodewordSeq::CodewordSeq(const LinearCode& c, const Caps& caps) : c_(&c), emitted_(0) {
    auto total = pow_checked(c.field().q(), c.k(), caps.max_codewords);
    if (!total) throw CapExceeded("codeword enumeration too large");
    total_ = *total;
    msg_.assign(c.k(), 0);
    word_.assign(c.n(), 0);
}

bool CodewordSeq::next(std::vector<int>& msg, std::vector<int>& codeword) {
    if (emitted_ >= total_) return false;
    if (emitted_ > 0) {
        // lexicographic increment: last coordinate fastest
        const Field& f = c_->field();
        const long long q = f.q();
        int t = c_->k() - 1;
        while (t >= 0 && msg_[t] == q - 1) msg_[t--] = 0;
        ++msg_[t];
        word_ = c_->encode(msg_);
    }
    msg = msg_;
    codeword = word_;
    ++emitted_;
    return true;
}

}  // namespace bsym
