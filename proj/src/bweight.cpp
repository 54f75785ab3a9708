#include "bsym/bweight.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace bsym {

// ---------------------------------------------------------------------------
// index-set combinatorics
// ---------------------------------------------------------------------------

namespace {

std::vector<char> membership(const std::vector<int>& J, int n) {
    std::vector<char> in(n, 0);
    int prev = -1;
    for (int j : J) {
        if (j < 0 || j >= n || j <= prev) throw DomainError("index set not a sorted subset of Z_n");
        in[j] = 1;
        prev = j;
    }
    return in;
}

}  // namespace

HoleDecomposition holes_of(const std::vector<int>& J, int n) {
    if (n <= 0) throw DomainError("n must be positive");
    std::vector<char> in = membership(J, n);
    HoleDecomposition hd{n, J, {}};
    if (J.empty() || (int)J.size() == n) return hd;
    for (int a : J) {
        int pos = (a + 1) % n;
        if (in[pos]) continue;
        int len = 0;
        while (!in[pos]) {
            ++len;
            pos = (pos + 1) % n;
        }
        hd.holes.push_back(Hole{(a + 1) % n, len});
    }
    return hd;
}

std::vector<int> window_set(const std::vector<int>& J, int n, int b, bool backward) {
    if (b < 1 || b > n) throw DomainError("window length out of range");
    std::vector<char> in = membership(J, n);
    std::vector<char> out(n, 0);
    for (int j = 0; j < n; ++j) {
        if (!in[j]) continue;
        for (int i = 0; i < b; ++i) {
            int pos = backward ? (j - i + n) % n : (j + i) % n;
            out[pos] = 1;
        }
    }
    std::vector<int> res;
    for (int j = 0; j < n; ++j)
        if (out[j]) res.push_back(j);
    return res;
}

// ---------------------------------------------------------------------------
// b-symbol weights
// ---------------------------------------------------------------------------

int b_weight_vector(std::span<const int> x, int b) {
    int n = (int)x.size();
    if (b < 1 || b > n) throw DomainError("window length out of range");
    int w = 0;
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < b; ++t) {
            if (x[(i + t) % n] != 0) {
                ++w;
                break;
            }
        }
    }
    return w;
}

std::vector<int> one_support(const Subspace& D) {
    int n = D.ambient();
    std::vector<char> seen(n, 0);
    for (int i = 0; i < D.dim(); ++i)
        for (int j = 0; j < n; ++j)
            if (D.basis().at(i, j) != 0) seen[j] = 1;
    std::vector<int> res;
    for (int j = 0; j < n; ++j)
        if (seen[j]) res.push_back(j);
    return res;
}

std::vector<int> b_support(const Subspace& D, int b, const Caps& caps) {
    int n = D.ambient();
    if (b < 1 || b > n) throw DomainError("window length out of range");
    const Field& f = D.field();
    auto total = pow_checked(f.q(), D.dim(), caps.max_codewords);
    if (!total) throw CapExceeded("subspace enumeration too large");
    std::vector<char> seen(n, 0);
    std::vector<int> coeff(D.dim(), 0), v(n, 0);
    for (long long it = 0; it < *total; ++it) {
        // v = sum coeff_i * basis row i
        std::fill(v.begin(), v.end(), 0);
        for (int i = 0; i < D.dim(); ++i) {
            if (coeff[i] == 0) continue;
            for (int j = 0; j < n; ++j)
                v[j] = f.add(v[j], f.mul(coeff[i], D.basis().at(i, j)));
        }
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            for (int t = 0; t < b; ++t)
                if (v[(i + t) % n] != 0) {
                    seen[i] = 1;
                    break;
                }
        }
        int t = D.dim() - 1;
        while (t >= 0 && coeff[t] == f.q() - 1) coeff[t--] = 0;
        if (t < 0) break;
        ++coeff[t];
    }
    std::vector<int> res;
    for (int i = 0; i < n; ++i)
        if (seen[i]) res.push_back(i);
    return res;
}

int w_b_from_holes(int n, int w1, const std::vector<int>& hole_lengths, int b) {
    if (b < 1 || b > n) throw DomainError("window length out of range");
    if (w1 == 0) return 0;
    int w = w1;
    for (int h : hole_lengths) w += (h <= b - 1) ? h : b - 1;
    return w;
}

int w_b_via_holes(const Subspace& D, int b) {
    int n = D.ambient();
    std::vector<int> chi1 = one_support(D);
    HoleDecomposition hd = holes_of(chi1, n);
    std::vector<int> lens;
    for (const Hole& h : hd.holes) lens.push_back(h.length);
    return w_b_from_holes(n, (int)chi1.size(), lens, b);
}

// ---------------------------------------------------------------------------
// subspace scans
// ---------------------------------------------------------------------------

namespace {

// Hole lengths of the complement of a support mask, any order.
void mask_holes(unsigned long long mask, int n, std::vector<int>& lens) {
    lens.clear();
    int w1 = std::popcount(mask);
    if (w1 == 0 || w1 == n) return;
    int s = std::countr_zero(mask);
    int run = 0;
    for (int step = 1; step <= n; ++step) {
        int pos = s + step;
        if (pos >= n) pos -= n;
        if ((mask >> pos) & 1ULL) {
            if (run) lens.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }
}

void array_holes(const std::vector<char>& in, int n, int w1, std::vector<int>& lens) {
    lens.clear();
    if (w1 == 0 || w1 == n) return;
    int s = 0;
    while (!in[s]) ++s;
    int run = 0;
    for (int step = 1; step <= n; ++step) {
        int pos = s + step;
        if (pos >= n) pos -= n;
        if (in[pos]) {
            if (run) lens.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }
}

// Fold one subspace's (w1, hole lengths) into the per-b minima. Lengths get
// sorted descending in place.
void fold_stats(int n, int w1, std::vector<int>& lens, ColumnScan& cs) {
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    long long small_total = 0;
    for (int h : lens) small_total += h;
    int big = (int)lens.size();
    long long big_sum = small_total;
    for (int b = 1; b <= n; ++b) {
        while (big > 0 && lens[big - 1] < b) {
            big_sum -= lens[big - 1];
            --big;
        }
        int w = w1 + (int)(small_total - big_sum) + (b - 1) * big;
        bool succ = big <= 1 && w < n;
        if (w < cs.min_wb[b]) {
            cs.min_wb[b] = w;
            cs.succ_min[b] = succ;
        } else if (w == cs.min_wb[b] && succ) {
            cs.succ_min[b] = 1;
        }
    }
}

}  // namespace

ColumnScan scan_subspaces(const LinearCode& C, int r, const Caps& caps) {
    const int n = C.n(), k = C.k();
    if (r < 1 || r > k) throw DomainError("subcode dimension out of range");
    const Field& f = C.field();
    const long long q = f.q();
    auto count = gaussian_binomial_checked(q, r, k);
    if (!count || *count > caps.max_subspaces) throw CapExceeded("enumeration too large");

    ColumnScan cs{r, std::vector<int>(n + 1, n + 1), std::vector<char>(n + 1, 0)};
    std::vector<int> lens;
    lens.reserve(n);

    if (n <= 64) {
        // support masks; precomputed per message when q^k is small enough
        std::vector<unsigned long long> table;
        auto qk = pow_checked(q, k, caps.max_codewords);
        if (qk) {
            table.resize((size_t)*qk);
            CodewordSeq seq(C, caps);
            std::vector<int> msg, word;
            size_t idx = 0;
            while (seq.next(msg, word)) {
                unsigned long long m = 0;
                for (int j = 0; j < n; ++j)
                    if (word[j] != 0) m |= 1ULL << j;
                table[idx++] = m;
            }
        }
        visit_rref_bases(f, k, r,
                         [&](const std::vector<std::vector<int>>& rows,
                             const std::vector<long long>& codes) {
                             unsigned long long mask = 0;
                             if (!table.empty()) {
                                 for (long long c : codes) mask |= table[(size_t)c];
                             } else {
                                 for (const auto& row : rows) {
                                     std::vector<int> img = vec_mat(row, C.generator());
                                     for (int j = 0; j < n; ++j)
                                         if (img[j] != 0) mask |= 1ULL << j;
                                 }
                             }
                             int w1 = std::popcount(mask);
                             mask_holes(mask, n, lens);
                             fold_stats(n, w1, lens, cs);
                         });
    } else {
        std::vector<char> in(n);
        visit_rref_bases(f, k, r,
                         [&](const std::vector<std::vector<int>>& rows,
                             const std::vector<long long>&) {
                             std::fill(in.begin(), in.end(), 0);
                             int w1 = 0;
                             for (const auto& row : rows) {
                                 std::vector<int> img = vec_mat(row, C.generator());
                                 for (int j = 0; j < n; ++j)
                                     if (img[j] != 0 && !in[j]) {
                                         in[j] = 1;
                                         ++w1;
                                     }
                             }
                             array_holes(in, n, w1, lens);
                             fold_stats(n, w1, lens, cs);
                         });
    }
    return cs;
}

int d_b_r(const LinearCode& C, int b, int r, const Caps& caps) {
    if (b < 1 || b > C.n()) throw DomainError("window length out of range");
    return scan_subspaces(C, r, caps).min_wb[b];
}

// ---------------------------------------------------------------------------
// weight hierarchy
// ---------------------------------------------------------------------------

namespace {

struct HierarchyResult {
    std::vector<int> d1;  // index 1..k
    bool via_dual = false;
    // direct-route scans kept for reuse; empty on the dual route
    std::vector<std::optional<ColumnScan>> scans;
};

bool all_dims_within(long long q, int k, long long cap) {
    for (int j = 1; j <= k; ++j) {
        auto c = gaussian_binomial_checked(q, j, k);
        if (!c || *c > cap) return false;
    }
    return true;
}

HierarchyResult hierarchy_impl(const LinearCode& C, const Caps& caps) {
    const int n = C.n(), k = C.k();
    const long long q = C.field().q();
    HierarchyResult hr;
    hr.d1.assign(k + 1, 0);
    if (k == n) {
        // dual hierarchy is empty, so the complement is everything
        for (int j = 1; j <= k; ++j) hr.d1[j] = j;
        hr.via_dual = true;
        return hr;
    }
    bool direct_ok = all_dims_within(q, k, caps.max_subspaces);
    bool dual_ok = all_dims_within(q, n - k, caps.max_subspaces);
    if (dual_ok && (!direct_ok || n - k < k)) {
        LinearCode dual = C.dual();
        std::vector<char> removed(n + 2, 0);
        for (int j = 1; j <= n - k; ++j) {
            int dj = scan_subspaces(dual, j, caps).min_wb[1];
            removed[n + 1 - dj] = 1;
        }
        int idx = 0;
        for (int v = 1; v <= n; ++v)
            if (!removed[v]) hr.d1[++idx] = v;
        if (idx != k) throw InvariantViolation("hierarchy complement has wrong size");
        hr.via_dual = true;
        return hr;
    }
    if (!direct_ok) throw CapExceeded("weight hierarchy enumeration too large");
    hr.scans.assign(k + 1, std::nullopt);
    for (int j = 1; j <= k; ++j) {
        hr.scans[j] = scan_subspaces(C, j, caps);
        hr.d1[j] = hr.scans[j]->min_wb[1];
    }
    return hr;
}

}  // namespace

std::vector<int> weight_hierarchy(const LinearCode& C, const Caps& caps) {
    HierarchyResult hr = hierarchy_impl(C, caps);
    return std::vector<int>(hr.d1.begin() + 1, hr.d1.end());
}

// ---------------------------------------------------------------------------
// the weight matrix
// ---------------------------------------------------------------------------

std::string BWeightMatrix::to_text() const {
    std::ostringstream os;
    for (int b = 1; b <= n; ++b) {
        for (int r = 1; r <= k; ++r) {
            if (r > 1) os << ' ';
            os << at(b, r);
        }
        os << '\n';
    }
    return os.str();
}

BWeightMatrix singleton_matrix(int n, int k) {
    BWeightMatrix m{n, k, std::vector<int>((size_t)n * k, 0)};
    for (int b = 1; b <= n; ++b)
        for (int r = 1; r <= k; ++r) m.set(b, r, std::min(n - k + b + r - 1, n));
    return m;
}

namespace {

// Earliest cyclic interval of the given length whose shortened subcode has
// dimension >= r; the closed-form witness test.
std::optional<std::pair<int, int>> interval_witness(const LinearCode& C, int r, int len) {
    const int n = C.n(), k = C.k();
    if (len >= n) return k >= r ? std::make_optional(std::make_pair(0, n)) : std::nullopt;
    for (int s = 0; s < n; ++s) {
        std::vector<int> outside;
        outside.reserve(n - len);
        for (int j = 0; j < n; ++j) {
            int off = (j - s + n) % n;
            if (off >= len) outside.push_back(j);
        }
        int dim = k - rank_of(select_columns(C.generator(), outside));
        if (dim >= r) return std::make_pair(s, len);
    }
    return std::nullopt;
}

}  // namespace

DMatrixResult d_matrix_full(const LinearCode& C, const Caps& caps) {
    const int n = C.n(), k = C.k();
    const long long q = C.field().q();
    HierarchyResult hr = hierarchy_impl(C, caps);

    DMatrixResult res;
    res.D = BWeightMatrix{n, k, std::vector<int>((size_t)n * k, 0)};
    res.first_row = hr.d1;
    res.via_dual_hierarchy = hr.via_dual;
    res.columns.resize(k + 1);

    std::vector<int> forced;
    for (int r = 1; r <= k; ++r) {
        DColumn& col = res.columns[r];
        col.r = r;
        col.succ_min.assign(n + 1, 0);
        const int d1 = hr.d1[r];
        std::optional<ColumnScan> scan;
        if (!hr.scans.empty() && hr.scans[r]) scan = hr.scans[r];

        if (scan) {
            col.method = ColumnMethod::Enumerated;
        } else if (auto w = interval_witness(C, r, d1)) {
            col.method = ColumnMethod::ClosedForm;
            col.interval = w;
        } else {
            auto cnt = gaussian_binomial_checked(q, r, k);
            if (cnt && *cnt <= caps.max_subspaces) {
                scan = scan_subspaces(C, r, caps);
                col.method = ColumnMethod::Enumerated;
            } else {
                col.method = ColumnMethod::Forced;
                forced.push_back(r);
                continue;
            }
        }
        if (col.method == ColumnMethod::ClosedForm) {
            for (int b = 1; b <= n; ++b) {
                int v = std::min(d1 + b - 1, n);
                res.D.set(b, r, v);
                col.succ_min[b] = v < n;
            }
            col.succ_known = true;
        } else {
            if (scan->min_wb[1] != d1)
                throw InvariantViolation("hierarchy and column scan disagree");
            for (int b = 1; b <= n; ++b) res.D.set(b, r, scan->min_wb[b]);
            col.succ_min = scan->succ_min;
            col.succ_known = true;
        }
    }

    if (!forced.empty()) {
        // interval propagation from the strict-increase and upper-bound laws
        std::vector<std::vector<int>> lo(n + 1, std::vector<int>(k + 1)),
            hi(n + 1, std::vector<int>(k + 1));
        auto known = [&](int r) {
            return std::find(forced.begin(), forced.end(), r) == forced.end();
        };
        for (int r = 1; r <= k; ++r)
            for (int b = 1; b <= n; ++b) {
                if (known(r)) {
                    lo[b][r] = hi[b][r] = res.D.at(b, r);
                } else {
                    lo[b][r] = std::min(hr.d1[r] + b - 1, n);
                    hi[b][r] = n;
                    if (k > b && r <= k - b) hi[b][r] = std::min(hi[b][r], n + b + r - k - 1);
                    if (b == 1) lo[b][r] = hi[b][r] = hr.d1[r];
                }
            }
        for (bool changed = true; changed;) {
            changed = false;
            auto tighten_lo = [&](int b, int r, int v) {
                if (v > lo[b][r]) {
                    lo[b][r] = v;
                    changed = true;
                }
            };
            auto tighten_hi = [&](int b, int r, int v) {
                if (v < hi[b][r]) {
                    hi[b][r] = v;
                    changed = true;
                }
            };
            for (int r : forced)
                for (int b = 1; b <= n; ++b) {
                    if (b > 1) tighten_lo(b, r, std::min(lo[b - 1][r] + 1, n));
                    if (b < n) {
                        tighten_hi(b, r, hi[b + 1][r]);
                        if (hi[b + 1][r] < n) tighten_hi(b, r, hi[b + 1][r] - 1);
                    }
                    if (r > 1) tighten_lo(b, r, std::min(lo[b][r - 1] + 1, n));
                    if (r < k) {
                        tighten_hi(b, r, hi[b][r + 1]);
                        if (hi[b][r + 1] < n) tighten_hi(b, r, hi[b][r + 1] - 1);
                    }
                }
        }
        for (int r : forced)
            for (int b = 1; b <= n; ++b) {
                if (lo[b][r] != hi[b][r])
                    throw CapExceeded("weight matrix entry undetermined within caps");
                res.D.set(b, r, lo[b][r]);
            }
    }

    // sanity: monotone and dominated (these are theorems)
    BWeightMatrix dom = singleton_matrix(n, k);
    for (int b = 1; b <= n; ++b)
        for (int r = 1; r <= k; ++r) {
            if (res.D.at(b, r) > dom.at(b, r))
                throw InvariantViolation("weight matrix exceeds its ceiling");
            if (b > 1 && res.D.at(b, r) < res.D.at(b - 1, r))
                throw InvariantViolation("weight matrix not column-monotone");
            if (r > 1 && res.D.at(b, r) < res.D.at(b, r - 1))
                throw InvariantViolation("weight matrix not row-monotone");
        }
    return res;
}

BWeightMatrix d_matrix(const LinearCode& C, const Caps& caps) { return d_matrix_full(C, caps).D; }

// ---------------------------------------------------------------------------
// bound/theorem harness
// ---------------------------------------------------------------------------

bool all_pass(const std::vector<ClauseResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

std::vector<ClauseResult> check_bound_theorems(const LinearCode& C, const Caps& caps) {
    const int n = C.n(), k = C.k();
    DMatrixResult res = d_matrix_full(C, caps);
    const BWeightMatrix& D = res.D;
    const std::vector<int>& d1 = res.first_row;
    std::vector<ClauseResult> out;

    auto fail = [](ClauseResult& c, const std::string& note) {
        c.pass = false;
        if (c.note.empty()) c.note = note;
    };
    auto add = [&out](const char* name) -> ClauseResult& {
        out.push_back(ClauseResult{name, true, false, ""});
        return out.back();
    };

    {
        ClauseResult& c = add("hamming-floor-saturation");
        for (int r = 1; r <= k - 1; ++r)
            for (int b = 1; b <= n; ++b)
                if (d1[r] >= n - b + 1 && D.at(b, r) != n)
                    fail(c, "d1 dense but d_b below n at r=" + std::to_string(r) +
                                " b=" + std::to_string(b));
    }
    {
        ClauseResult& c = add("hamming-floor-bounds");
        for (int r = 1; r <= k - 1; ++r)
            for (int b = 1; b <= n; ++b)
                if (d1[r] < n - b + 1) {
                    int v = D.at(b, r);
                    if (v < d1[r] + b - 1 || v > b * d1[r])
                        fail(c, "bounds violated at r=" + std::to_string(r) +
                                    " b=" + std::to_string(b));
                }
    }
    {
        ClauseResult& c = add("rank-monotone-strict");
        for (int b = 1; b <= n; ++b)
            for (int r = 1; r <= k - 1; ++r)
                if (D.at(b, r + 1) < n && D.at(b, r) >= D.at(b, r + 1))
                    fail(c, "no strict increase at b=" + std::to_string(b) +
                                " r=" + std::to_string(r));
    }
    {
        ClauseResult& c = add("rank-chain");
        for (int b = 1; b < k; ++b) {
            if (D.at(b, 1) < b) fail(c, "d_b^1 below b at b=" + std::to_string(b));
            for (int r = 1; r <= k - b; ++r)
                if (D.at(b, r) >= D.at(b, r + 1))
                    fail(c, "chain not strict at b=" + std::to_string(b) +
                                " r=" + std::to_string(r));
            for (int r = k - b + 1; r < k; ++r)
                if (D.at(b, r) > D.at(b, r + 1)) fail(c, "chain decreases");
            if (D.at(b, k) > n) fail(c, "chain exceeds n");
        }
    }
    {
        ClauseResult& c = add("rank-upper-bounds");
        for (int b = 1; b < k; ++b)
            for (int r = 1; r <= k; ++r) {
                int bound = (r <= k - b) ? n + b + r - k - 1 : n;
                if (D.at(b, r) > bound)
                    fail(c, "upper bound violated at b=" + std::to_string(b) +
                                " r=" + std::to_string(r));
            }
    }
    {
        ClauseResult& c = add("singleton-b");
        for (int b = 1; b <= n; ++b)
            if (D.at(b, 1) > std::min(n + b - k, n))
                fail(c, "b-singleton violated at b=" + std::to_string(b));
    }
    {
        ClauseResult& c = add("window-monotone-strict");
        for (int r = 1; r <= k; ++r)
            for (int b = 1; b <= n - 1; ++b)
                if (D.at(b + 1, r) < n && D.at(b, r) >= D.at(b + 1, r))
                    fail(c, "no strict increase at r=" + std::to_string(r) +
                                " b=" + std::to_string(b));
    }
    {
        ClauseResult& c = add("window-chain");
        for (int r = 1; r <= k; ++r) {
            if (D.at(1, r) < 1) fail(c, "below 1");
            for (int b = 1; b <= k - r - 1; ++b)
                if (D.at(b, r) >= D.at(b + 1, r))
                    fail(c, "chain not strict at r=" + std::to_string(r) +
                                " b=" + std::to_string(b));
            for (int b = std::max(1, k - r); b < n; ++b)
                if (D.at(b, r) > D.at(b + 1, r)) fail(c, "chain decreases");
            if (D.at(n, r) != n) fail(c, "last entry not n at r=" + std::to_string(r));
        }
    }
    {
        ClauseResult& c = add("window-step-iff-successive");
        bool any = false;
        for (int r = 1; r <= k; ++r) {
            const DColumn& col = res.columns[r];
            if (!col.succ_known) continue;
            any = true;
            for (int b = 1; b <= n - 1; ++b) {
                bool step = D.at(b + 1, r) == D.at(b, r) + 1;
                bool succ = col.succ_min[b] != 0;
                if (step != succ)
                    fail(c, "step/successive mismatch at r=" + std::to_string(r) +
                                " b=" + std::to_string(b));
            }
        }
        if (!any) {
            c.skipped = true;
            c.note = "no column has successive-minimizer data";
        }
    }
    {
        ClauseResult& c = add("successive-witness-closed-form");
        for (int r = 1; r <= k; ++r) {
            if (res.columns[r].method == ColumnMethod::Forced) continue;
            if (interval_witness(C, r, d1[r])) {
                for (int b = 1; b <= n; ++b)
                    if (D.at(b, r) != std::min(d1[r] + b - 1, n))
                        fail(c, "witness exists but column is not closed form at r=" +
                                    std::to_string(r));
            }
        }
    }
    {
        ClauseResult& c = add("matrix-monotone");
        for (int b = 1; b <= n; ++b)
            for (int r = 1; r <= k; ++r) {
                if (r > 1 && D.at(b, r) < D.at(b, r - 1)) fail(c, "row decreases");
                if (b > 1 && D.at(b, r) < D.at(b - 1, r)) fail(c, "column decreases");
            }
    }
    BWeightMatrix dom = singleton_matrix(n, k);
    {
        ClauseResult& c = add("matrix-dominated");
        for (int b = 1; b <= n; ++b)
            for (int r = 1; r <= k; ++r)
                if (D.at(b, r) > dom.at(b, r)) fail(c, "exceeds ceiling");
    }
    {
        ClauseResult& c = add("mds-row-equivalence");
        for (int b = 1; b <= n; ++b) {
            bool first = D.at(b, 1) == dom.at(b, 1);
            bool row = true;
            for (int r = 1; r <= k; ++r) row = row && D.at(b, r) == dom.at(b, r);
            if (first != row) fail(c, "first-entry and full-row tests disagree");
        }
    }
    {
        ClauseResult& c = add("mds-ladder");
        bool seen = false;
        for (int b = 1; b <= n; ++b) {
            bool mds = D.at(b, 1) == dom.at(b, 1);
            if (seen && !mds) fail(c, "ladder not upward closed at b=" + std::to_string(b));
            seen = seen || mds;
        }
        if (!seen) fail(c, "no b qualifies, but b=n always must");
    }
    {
        ClauseResult& c = add("mds-full-matrix-iff");
        bool one_mds = D.at(1, 1) == dom.at(1, 1);
        bool whole = D == dom;
        if (one_mds != whole) fail(c, "1-MDS and full-matrix tests disagree");
    }
    return out;
}

}  // namespace bsym
