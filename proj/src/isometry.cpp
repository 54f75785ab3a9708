#include "bsym/isometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bsym {

// ---------------------------------------------------------------------------
// rationals
// ---------------------------------------------------------------------------

Rat::Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
}

Rat Rat::operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
Rat Rat::operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
Rat Rat::operator/(const Rat& o) const {
    if (o.num == 0) throw DomainError("division by zero");
    return Rat(num * o.den, den * o.num);
}

std::string Rat::str() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << '/' << den;
    return os.str();
}

// ---------------------------------------------------------------------------
// window census
// ---------------------------------------------------------------------------

WindowCensus window_census(const FqMatrix& G, int b) {
    const int n = G.cols(), k = G.rows();
    if (b < 1 || b > n) throw DomainError("window length out of range");
    WindowCensus wc;
    wc.b = b;
    const Field& f = G.field();
    for (int j = 0; j < n; ++j) {
        FqMatrix win(f, b, k);  // window columns as row vectors of F_q^k
        for (int t = 0; t < b; ++t)
            for (int i = 0; i < k; ++i) win.set(t, i, G.at(i, (j + t) % n));
        Subspace s = Subspace::span_of(win);
        wc.counts[s] += 1;
        wc.spans.push_back(std::move(s));
    }
    return wc;
}

int windows_inside(const WindowCensus& census, const Subspace& U) {
    int total = 0;
    for (const auto& [v, m] : census.counts)
        if (U.contains(v)) total += m;
    return total;
}

int d_b_r_via_census(const LinearCode& C, int b, int r, const Caps& caps) {
    const int n = C.n(), k = C.k();
    if (b < 1 || b > n) throw DomainError("window length out of range");
    if (r < 1 || r > k) throw DomainError("subcode dimension out of range");
    WindowCensus census = window_census(C.generator(), b);
    int best = n + 1;
    const Field& f = C.field();
    auto count = gaussian_binomial_checked(f.q(), r, k);
    if (!count || *count > caps.max_subspaces) throw CapExceeded("enumeration too large");
    visit_rref_bases(f, k, r,
                     [&](const std::vector<std::vector<int>>& rows, const std::vector<long long>&) {
                         Subspace msg = Subspace::from_canonical(FqMatrix::from_rows(f, rows));
                         int w = n - windows_inside(census, msg.orthocomplement());
                         best = std::min(best, w);
                     });
    return best;
}

// ---------------------------------------------------------------------------
// incidence matrices
// ---------------------------------------------------------------------------

IncidenceMatrix t_matrix(const Field& f, int k, int r, int s, const Caps& caps) {
    if (!(0 <= r && r <= s && s <= k)) throw DomainError("incidence dimensions out of order");
    std::vector<Subspace> R = pg_ordered(f, k, r, caps);
    std::vector<Subspace> S = pg_ordered(f, k, s, caps);
    IncidenceMatrix m;
    m.q = f.q();
    m.k = k;
    m.r = r;
    m.s = s;
    m.rows = (int)R.size();
    m.cols = (int)S.size();
    m.t.assign((size_t)m.rows * m.cols, 0);
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i)
            if (S[j].contains(R[i])) m.t[(size_t)i * m.cols + j] = 1;
    return m;
}

// ---------------------------------------------------------------------------
// per-point census sums
// ---------------------------------------------------------------------------

namespace {

long long ipow(long long q, int e) {
    long long r = 1;
    while (e-- > 0) r *= q;
    return r;
}

}  // namespace

std::vector<Rat> census_point_sums(const WindowCensus& census, const Field& f, int k,
                                   const Caps& caps) {
    const int s = std::min(census.b, k - 1);
    std::vector<Subspace> lines = pg_ordered(f, k, 1, caps);
    std::vector<Rat> sums(lines.size());
    for (const auto& [v, m] : census.counts) {
        if (v.dim() < 1 || v.dim() > s) continue;
        Rat term(m, ipow(f.q(), v.dim()));
        for (size_t i = 0; i < lines.size(); ++i)
            if (v.contains(lines[i])) sums[i] = sums[i] + term;
    }
    return sums;
}

std::vector<Rat> census_point_sums_by_window(const FqMatrix& G, int b, const Caps& caps) {
    const Field& f = G.field();
    const int k = G.rows();
    WindowCensus census = window_census(G, b);
    std::vector<Subspace> lines = pg_ordered(f, k, 1, caps);
    std::vector<Rat> sums(lines.size());
    for (const Subspace& span : census.spans) {
        if (span.dim() < 1) continue;
        Rat term(1, ipow(f.q(), span.dim()));
        for (size_t i = 0; i < lines.size(); ++i)
            if (span.contains(lines[i])) sums[i] = sums[i] + term;
    }
    return sums;
}

PointSumComparison compare_point_sum_paths(const FqMatrix& G, int b, const Caps& caps) {
    const int k = G.rows();
    WindowCensus census = window_census(G, b);
    PointSumComparison cmp;
    const int s = std::min(b, k - 1);
    for (const auto& [v, m] : census.counts)
        if (v.dim() > s) cmp.cutoff_active = true;
    cmp.equal = census_point_sums(census, G.field(), k, caps) ==
                census_point_sums_by_window(G, b, caps);
    return cmp;
}

// ---------------------------------------------------------------------------
// preservation of b-weights
// ---------------------------------------------------------------------------

namespace {

void validate_isomorphism(const LinearCode& C, const LinearCode& C_tilde, const FqMatrix& images) {
    if (&images.field() != &C.field() || &C.field() != &C_tilde.field())
        throw DomainError("field mismatch");
    if (images.rows() != C.k() || images.cols() != C.n())
        throw DomainError("not an isomorphism");
    if (rank_of(images) != C.k()) throw DomainError("not an isomorphism");
    if (C_tilde.k() != C.k()) throw DomainError("not an isomorphism");
    for (int i = 0; i < images.rows(); ++i) {
        std::vector<int> syn = vec_mat(images.row(i), C_tilde.check().transpose());
        for (int v : syn)
            if (v != 0) throw DomainError("not an isomorphism");
    }
}

}  // namespace

PreserveReport preserves_b_weight(const LinearCode& C, const LinearCode& C_tilde,
                                  const FqMatrix& images, int b, const Caps& caps) {
    const int n = C.n(), k = C.k();
    if (b < 1 || b > n) throw DomainError("window length out of range");
    validate_isomorphism(C, C_tilde, images);

    WindowCensus cg = window_census(C.generator(), b);
    WindowCensus ct = window_census(images, b);
    std::vector<Rat> a = census_point_sums(cg, C.field(), k, caps);
    std::vector<Rat> t = census_point_sums(ct, C.field(), k, caps);

    PreserveReport rep;
    rep.sums_constant = true;
    for (size_t i = 0; i < a.size(); ++i) {
        Rat diff = a[i] - t[i];
        if (i == 0)
            rep.constant = diff;
        else if (!(diff == rep.constant))
            rep.sums_constant = false;
    }
    rep.witness_weight = b_weight_vector(C.generator().row(0), b);
    rep.witness_image_weight = b_weight_vector(images.row(0), b);
    rep.preserves = rep.sums_constant && rep.witness_weight == rep.witness_image_weight;
    return rep;
}

bool brute_force_preserves(const LinearCode& C, const FqMatrix& images, int b, const Caps& caps) {
    CodewordSeq seq(C, caps);
    std::vector<int> msg, word;
    while (seq.next(msg, word)) {
        std::vector<int> image = vec_mat(msg, images);
        if (b_weight_vector(word, b) != b_weight_vector(image, b)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// monomial matrices
// ---------------------------------------------------------------------------

namespace {

// lambda with target = lambda * src, if any
std::optional<int> proportional(const Field& f, const FqMatrix& a, int src_col, const FqMatrix& b,
                                int tgt_col) {
    int lead = -1;
    for (int i = 0; i < a.rows(); ++i)
        if (a.at(i, src_col) != 0) {
            lead = i;
            break;
        }
    if (lead < 0) {
        for (int i = 0; i < b.rows(); ++i)
            if (b.at(i, tgt_col) != 0) return std::nullopt;
        return 1;  // zero column matches zero column, scale free
    }
    if (b.at(lead, tgt_col) == 0) return std::nullopt;
    int lambda = f.div(b.at(lead, tgt_col), a.at(lead, src_col));
    for (int i = 0; i < a.rows(); ++i)
        if (b.at(i, tgt_col) != f.mul(lambda, a.at(i, src_col))) return std::nullopt;
    return lambda;
}

bool match_columns(const Field& f, const FqMatrix& g, const FqMatrix& h, int u,
                   std::vector<int>& perm, std::vector<int>& scale, std::vector<char>& used) {
    const int n = g.cols();
    if (u == n) return true;
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        auto lambda = proportional(f, g, u, h, v);
        if (!lambda) continue;
        perm[u] = v;
        scale[v] = *lambda;
        used[v] = 1;
        if (match_columns(f, g, h, u + 1, perm, scale, used)) return true;
        used[v] = 0;
    }
    return false;
}

}  // namespace

std::optional<Monomial> find_monomial(const LinearCode& C, const FqMatrix& images) {
    const int n = C.n();
    if (images.rows() != C.k() || images.cols() != n) throw DomainError("not an isomorphism");
    const Field& f = C.field();
    Monomial m;
    m.perm.assign(n, -1);
    m.scale.assign(n, 1);
    std::vector<char> used(n, 0);
    if (!match_columns(f, C.generator(), images, 0, m.perm, m.scale, used)) return std::nullopt;
    return m;
}

// ---------------------------------------------------------------------------
// incidence identity checks (exact rationals)
// ---------------------------------------------------------------------------

namespace {

using RatMat = std::vector<std::vector<Rat>>;

RatMat to_rat(const IncidenceMatrix& m) {
    RatMat r(m.rows, std::vector<Rat>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i][j] = Rat(m.at(i, j));
    return r;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    size_t n = a.size(), m = b[0].size(), inner = b.size();
    RatMat c(n, std::vector<Rat>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < inner; ++l) {
            if (a[i][l].num == 0) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][l] * b[l][j];
        }
    return c;
}

RatMat rat_transpose(const RatMat& a) {
    RatMat t(a[0].size(), std::vector<Rat>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

RatMat rat_add(const RatMat& a, const RatMat& b) {
    RatMat c = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) c[i][j] = a[i][j] + b[i][j];
    return c;
}

RatMat rat_scale(const Rat& s, const RatMat& a) {
    RatMat c = a;
    for (auto& row : c)
        for (auto& x : row) x = x * s;
    return c;
}

RatMat rat_const(size_t rows, size_t cols, const Rat& v) {
    return RatMat(rows, std::vector<Rat>(cols, v));
}

RatMat rat_identity(size_t n) {
    RatMat c(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i) c[i][i] = Rat(1);
    return c;
}

}  // namespace

std::vector<ClauseResult> check_incidence_identities(const Field& f, int k, const Caps& caps) {
    const long long q = f.q();
    std::vector<ClauseResult> out;
    auto add = [&out](const std::string& name) -> ClauseResult& {
        out.push_back(ClauseResult{name, true, false, ""});
        return out.back();
    };

    {
        ClauseResult& c = add("column-sums-constant");
        for (int r = 1; r <= k; ++r)
            for (int s = r; s <= k; ++s) {
                IncidenceMatrix t = t_matrix(f, k, r, s, caps);
                long long expect = gaussian_binomial(q, r, s);
                for (int j = 0; j < t.cols; ++j) {
                    long long sum = 0;
                    for (int i = 0; i < t.rows; ++i) sum += t.at(i, j);
                    if (sum != expect) {
                        c.pass = false;
                        c.note = "column sum off at r=" + std::to_string(r) +
                                 " s=" + std::to_string(s);
                    }
                }
            }
    }
    if (k >= 2) {
        ClauseResult& c = add("hyperplane-incidence-inverse");
        RatMat t = to_rat(t_matrix(f, k, 1, k - 1, caps));
        size_t m = t.size();
        Rat coef(1, ipow(q, k - 2));
        Rat jcoef = Rat(ipow(q, k - 2) - 1, ipow(q, k - 1) - 1);
        RatMat inv = rat_scale(coef, rat_add(t, rat_scale(Rat(-1) * jcoef, rat_const(m, m, Rat(1)))));
        if (rat_mul(t, inv) != rat_identity(m)) {
            c.pass = false;
            c.note = "explicit inverse formula fails";
        } else {
            // constant row sums of the inverse
            Rat first;
            for (size_t j = 0; j < m; ++j) {
                Rat sum;
                for (size_t i = 0; i < m; ++i) sum = sum + inv[i][j];
                if (j == 0)
                    first = sum;
                else if (!(sum == first)) {
                    c.pass = false;
                    c.note = "inverse column sums not constant";
                }
            }
        }
    }
    if (k >= 2) {
        ClauseResult& c = add("hyperplane-products");
        RatMat t1 = to_rat(t_matrix(f, k, 1, k - 1, caps));
        size_t m = t1.size();
        Rat jinv_coef(1, ipow(q, k - 2));
        Rat jco = Rat(ipow(q, k - 2) - 1, ipow(q, k - 1) - 1);
        RatMat t1inv =
            rat_scale(jinv_coef, rat_add(t1, rat_scale(Rat(-1) * jco, rat_const(m, m, Rat(1)))));
        for (int r = 1; r <= k - 1; ++r) {
            RatMat tr = to_rat(t_matrix(f, k, r, k - 1, caps));
            RatMat t1r = to_rat(t_matrix(f, k, 1, r, caps));
            size_t rows = tr.size();
            RatMat lhs = rat_mul(tr, t1);
            RatMat rhs = rat_add(rat_scale(Rat(ipow(q, k - r - 1)), rat_transpose(t1r)),
                                 rat_scale(Rat(ipow(q, k - r - 1) - 1, q - 1),
                                           rat_const(rows, m, Rat(1))));
            if (lhs != rhs) {
                c.pass = false;
                c.note = "product identity fails at r=" + std::to_string(r);
            }
            RatMat lhs2 = rat_mul(tr, t1inv);
            RatMat rhs2 = rat_add(
                rat_scale(Rat(1, ipow(q, r - 1)), rat_transpose(t1r)),
                rat_scale(Rat(-(ipow(q, r - 1) - 1), ipow(q, r - 1) * (ipow(q, k - 1) - 1)),
                          rat_const(rows, m, Rat(1))));
            if (lhs2 != rhs2) {
                c.pass = false;
                c.note = "inverse product identity fails at r=" + std::to_string(r);
            }
        }
    }
    {
        ClauseResult& c = add("triple-product-collapse");
        for (int r = 1; r <= k; ++r)
            for (int s = r; s <= k; ++s)
                for (int z = s; z <= k; ++z) {
                    RatMat a = to_rat(t_matrix(f, k, r, s, caps));
                    RatMat b = to_rat(t_matrix(f, k, s, z, caps));
                    RatMat prod = rat_mul(a, b);
                    RatMat expect = rat_scale(Rat(gaussian_binomial(q, s - r, z - r)),
                                              to_rat(t_matrix(f, k, r, z, caps)));
                    if (prod != expect) {
                        c.pass = false;
                        c.note = "collapse fails at r=" + std::to_string(r) +
                                 " s=" + std::to_string(s) + " z=" + std::to_string(z);
                    }
                }
    }
    return out;
}

}  // namespace bsym
