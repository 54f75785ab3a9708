#include "bsym/towers.hpp"

#include <algorithm>

#include "bsym/bweight.hpp"

namespace bsym {

namespace {

// base-p digit vector of an element repr
std::vector<int> digits(const Field& f, int v) {
    std::vector<int> d(f.e());
    for (int i = 0; i < f.e(); ++i) {
        d[i] = v % f.p();
        v /= f.p();
    }
    return d;
}

// Membership conditions for "every coordinate lies in the embedded subfield",
// as a linear system over GF(p) in the k*e prime-field coefficients of a
// codeword. Returns the solution basis (rows are coefficient vectors).
FqMatrix subfield_membership_solutions(const LinearCode& C, const Field& base) {
    const Field& ext = C.field();
    const Field& gfp = Field::get(ext.p(), 1);
    const int e = ext.e(), m = base.e(), k = C.k(), n = C.n();

    // orthogonal complement of the embedded subfield, in prime-field coords
    FqMatrix image(gfp, m, e);
    for (int s = 0; s < m; ++s) {
        long long ps = 1;
        for (int t = 0; t < s; ++t) ps *= base.p();
        std::vector<int> dg = digits(ext, embed(base, ext, (int)ps));
        for (int t = 0; t < e; ++t) image.set(s, t, dg[t]);
    }
    FqMatrix perp = nullspace_basis(image);  // (e-m) x e

    // unknowns a_{i,t}: codeword = sum a_{i,t} * (x^t * g_i)
    FqMatrix system(gfp, n * perp.rows(), k * e);
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < e; ++t) {
            long long xt = 1;
            for (int s = 0; s < t; ++s) xt *= ext.p();
            int col = i * e + t;
            for (int j = 0; j < n; ++j) {
                std::vector<int> dg = digits(ext, ext.mul((int)xt, C.generator().at(i, j)));
                for (int u = 0; u < perp.rows(); ++u) {
                    int acc = 0;
                    for (int s = 0; s < e; ++s)
                        acc = gfp.add(acc, gfp.mul(dg[s], perp.at(u, s)));
                    system.set(j * perp.rows() + u, col, acc);
                }
            }
        }
    return nullspace_basis(system);
}

const Field& subfield_for(const LinearCode& C, int m) {
    const Field& ext = C.field();
    if (m < 1 || ext.e() % m != 0) throw DomainError("not a subfield");
    return Field::get(ext.p(), m);
}

}  // namespace

int subfield_subcode_dim(const LinearCode& C, int m) {
    const Field& base = subfield_for(C, m);
    if (m == C.field().e()) return C.k();
    FqMatrix sols = subfield_membership_solutions(C, base);
    if (sols.rows() % m != 0) throw InvariantViolation("solution space not subfield-linear");
    return sols.rows() / m;
}

LinearCode subfield_subcode(const LinearCode& C, int m) {
    const Field& ext = C.field();
    const Field& base = subfield_for(C, m);
    if (m == ext.e()) return C;
    const int e = ext.e(), k = C.k(), n = C.n();
    FqMatrix sols = subfield_membership_solutions(C, base);
    if (sols.rows() == 0) throw DomainError("zero code");
    std::vector<std::vector<int>> rows;
    for (int rrow = 0; rrow < sols.rows(); ++rrow) {
        std::vector<int> word(n, 0);
        for (int i = 0; i < k; ++i)
            for (int t = 0; t < e; ++t) {
                int a = sols.at(rrow, i * e + t);
                if (a == 0) continue;
                long long xt = 1;
                for (int s = 0; s < t; ++s) xt *= ext.p();
                int coeff = ext.mul(a % ext.p(), (int)xt);
                for (int j = 0; j < n; ++j)
                    word[j] = ext.add(word[j], ext.mul(coeff, C.generator().at(i, j)));
            }
        std::vector<int> base_word(n);
        for (int j = 0; j < n; ++j) base_word[j] = unembed(base, ext, word[j]);
        rows.push_back(std::move(base_word));
    }
    return LinearCode::from_generator(FqMatrix::from_rows(base, rows));
}

int essential_number(const LinearCode& C) {
    const int e = C.field().e();
    for (int m = 1; m <= e; ++m)
        if (e % m == 0 && subfield_subcode_dim(C, m) == C.k()) return m;
    throw InvariantViolation("no divisor keeps full dimension, but m = e always must");
}

LinearCode extend_code(const LinearCode& C, int m) {
    if (m < 1) throw DomainError("bad extension degree");
    const Field& f = C.field();
    if (m == 1) return C;
    const Field& ext = Field::get(f.p(), f.e() * m);
    FqMatrix g(ext, C.k(), C.n());
    for (int i = 0; i < C.k(); ++i)
        for (int j = 0; j < C.n(); ++j) g.set(i, j, embed(f, ext, C.generator().at(i, j)));
    LinearCode out = LinearCode::from_generator(g);
    if (out.k() != C.k()) throw InvariantViolation("extension changed the dimension");
    return out;
}

LinearCode trace_code(const LinearCode& C, const Field& base) {
    const Field& ext = C.field();
    if (!is_subfield(base, ext)) throw DomainError("not a subfield");
    const int d = ext.e() / base.e();
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < C.k(); ++i)
        for (int t = 0; t < d; ++t) {
            long long xt = 1;
            for (int s = 0; s < t; ++s) xt *= ext.p();
            std::vector<int> row(C.n());
            for (int j = 0; j < C.n(); ++j)
                row[j] = trace(ext, base, ext.mul((int)xt, C.generator().at(i, j)));
            rows.push_back(std::move(row));
        }
    return LinearCode::from_generator(FqMatrix::from_rows(base, rows));
}

long long d_b_code(const LinearCode& C, int b, const Caps& caps) {
    return d_b_r(C, b, 1, caps);
}

ReductionReport check_reduction(const LinearCode& C, int m, int b, const Caps& caps) {
    ReductionReport rep;
    rep.subcode_dim = subfield_subcode_dim(C, m);
    rep.applicable = rep.subcode_dim == C.k();
    if (!rep.applicable) return rep;
    LinearCode sub = subfield_subcode(C, m);
    rep.d_b_outer = d_b_code(C, b, caps);
    rep.path = "direct";
    rep.d_b_subcode = d_b_code(sub, b, caps);
    rep.equal = rep.d_b_outer == rep.d_b_subcode;
    return rep;
}

}  // namespace bsym
