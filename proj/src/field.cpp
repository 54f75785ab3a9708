#include "bsym/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace bsym {

namespace {

constexpr long long kTableLimit = 256;  // build full op tables up to this q

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), constant term first, no trailing-zero trimming
// guarantees. Only what the modulus search needs.
using Poly = std::vector<int>;

int poly_deg(const Poly& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// a mod b, b monic of degree db >= 0
Poly poly_mod(Poly a, const Poly& b, int db, int p) {
    for (int i = (int)a.size() - 1; i >= db; --i) {
        int c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (int j = 0; j < db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p * p) % p;
    }
    a.resize(db > 0 ? db : 1);
    return a;
}

bool divides(const Poly& g, const Poly& f, int p) {
    Poly r = poly_mod(f, g, poly_deg(g), p);
    return poly_deg(r) < 0;
}

// Trial factorization: no monic divisor of degree 1..e/2.
bool is_irreducible(const Poly& f, int e, int p) {
    for (int d = 1; 2 * d <= e; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long m = 0; m < count; ++m) {
            Poly g(d + 1, 0);
            g[d] = 1;
            long long t = m;
            for (int i = 0; i < d; ++i) {
                g[i] = (int)(t % p);
                t /= p;
            }
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree e, coefficient tuples (c0,...,c_{e-1})
// compared with c0 most significant.
Poly smallest_modulus(int p, int e) {
    if (e == 1) return Poly{0, 1};  // x
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long m = 0; m < count; ++m) {
        Poly f(e + 1, 0);
        f[e] = 1;
        long long t = m;
        for (int i = e - 1; i >= 0; --i) {  // last tuple slot varies fastest
            f[i] = (int)(t % p);
            t /= p;
        }
        if (is_irreducible(f, e, p)) return f;
    }
    throw InvariantViolation("no irreducible modulus found");
}

}  // namespace

Field::Field(int p, int e) : p_(p), e_(e) {
    if (e < 1) throw DomainError("bad exponent");
    if (!is_prime(p)) throw DomainError("not prime");
    q_ = 1;
    for (int i = 0; i < e; ++i) {
        q_ *= p;
        if (q_ > (1LL << 20)) throw DomainError("field too large");
    }
    modulus_ = smallest_modulus(p, e);
    if (q_ <= kTableLimit) {
        tab_mul_.resize(q_ * q_);
        tab_add_.resize(q_ * q_);
        tab_neg_.resize(q_);
        tab_inv_.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                tab_mul_[a * q_ + b] = mul_raw(a, b);
                // digitwise addition
                int s = 0, pw = 1, x = a, y = b;
                for (int i = 0; i < e_; ++i) {
                    s += ((x % p_) + (y % p_)) % p_ * pw;
                    x /= p_;
                    y /= p_;
                    pw *= p_;
                }
                tab_add_[a * q_ + b] = s;
            }
        }
        for (int a = 0; a < q_; ++a) {
            int s = 0, pw = 1, x = a;
            for (int i = 0; i < e_; ++i) {
                s += (p_ - (x % p_)) % p_ * pw;
                x /= p_;
                pw *= p_;
            }
            tab_neg_[a] = s;
        }
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (tab_mul_[a * q_ + b] == 1) tab_inv_[a] = b;
    }
}

const Field& Field::get(int p, int e) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<Field>(new Field(p, e))).first;
    return *it->second;
}

int Field::add(int a, int b) const {
    if (!tab_add_.empty()) return tab_add_[a * q_ + b];
    if (p_ == 2) return a ^ b;
    long long s = 0, pw = 1;
    int x = a, y = b;
    for (int i = 0; i < e_; ++i) {
        s += (long long)(((x % p_) + (y % p_)) % p_) * pw;
        x /= p_;
        y /= p_;
        pw *= p_;
    }
    return (int)s;
}

int Field::neg(int a) const {
    if (!tab_neg_.empty()) return tab_neg_[a];
    if (p_ == 2) return a;
    long long s = 0, pw = 1;
    int x = a;
    for (int i = 0; i < e_; ++i) {
        s += (long long)((p_ - (x % p_)) % p_) * pw;
        x /= p_;
        pw *= p_;
    }
    return (int)s;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul_raw(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    // coefficient convolution, then reduction by the monic modulus
    std::vector<int> da(e_), db(e_), prod(2 * e_ - 1, 0);
    int x = a, y = b;
    for (int i = 0; i < e_; ++i) {
        da[i] = x % p_;
        x /= p_;
        db[i] = y % p_;
        y /= p_;
    }
    for (int i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (int i = 2 * e_ - 2; i >= e_; --i) {
        int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < e_; ++j)
            prod[i - e_ + j] = ((prod[i - e_ + j] - c * modulus_[j]) % p_ + p_ * p_) % p_;
    }
    long long r = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
        r += (long long)prod[i] * pw;
        pw *= p_;
    }
    return (int)r;
}

int Field::mul(int a, int b) const {
    if (!tab_mul_.empty()) return tab_mul_[a * q_ + b];
    return mul_raw(a, b);
}

int Field::pow(int a, unsigned long long n) const {
    int r = 1, base = a;
    while (n > 0) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

int Field::inv(int a) const {
    if (a == 0) throw DomainError("zero inverse");
    if (!tab_inv_.empty()) return tab_inv_[a];
    return pow(a, (unsigned long long)(q_ - 2));
}

namespace {

// Cached embedding data for one subfield inclusion.
struct TowerData {
    std::vector<int> emb;                 // base repr -> ext repr
    std::unordered_map<int, int> unemb;   // ext repr -> base repr
};

const TowerData& tower_data(const Field& base, const Field& ext) {
    if (!is_subfield(base, ext)) throw DomainError("not a subfield");
    static std::mutex mu;
    static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<TowerData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(&base, &ext);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    auto data = std::make_unique<TowerData>();
    // smallest-repr root of base's modulus inside ext
    int root = -1;
    for (int z = 0; z < ext.q(); ++z) {
        int acc = 0, zp = 1;
        for (int i = 0; i <= base.e(); ++i) {
            acc = ext.add(acc, ext.mul(base.modulus()[i] % base.p(), zp));
            zp = ext.mul(zp, z);
        }
        if (acc == 0) {
            root = z;
            break;
        }
    }
    if (root < 0) throw InvariantViolation("subfield modulus has no root in extension");
    data->emb.resize(base.q());
    for (int a = 0; a < base.q(); ++a) {
        int val = 0, rp = 1, x = a;
        for (int i = 0; i < base.e(); ++i) {
            val = ext.add(val, ext.mul(x % base.p(), rp));
            x /= base.p();
            rp = ext.mul(rp, root);
        }
        data->emb[a] = val;
        data->unemb[val] = a;
    }
    it = cache.emplace(key, std::move(data)).first;
    return *it->second;
}

}  // namespace

bool is_subfield(const Field& base, const Field& ext) {
    return base.p() == ext.p() && ext.e() % base.e() == 0;
}

int embed(const Field& base, const Field& ext, int x) { return tower_data(base, ext).emb[x]; }

int unembed(const Field& base, const Field& ext, int x) {
    const auto& td = tower_data(base, ext);
    auto it = td.unemb.find(x);
    if (it == td.unemb.end()) throw DomainError("element not in subfield");
    return it->second;
}

bool in_embedded_subfield(const Field& base, const Field& ext, int x) {
    const auto& td = tower_data(base, ext);
    return td.unemb.count(x) > 0;
}

int trace(const Field& ext, const Field& base, int x) {
    if (!is_subfield(base, ext)) throw DomainError("not a subfield");
    int d = ext.e() / base.e();
    unsigned long long Q = (unsigned long long)base.q();
    int acc = 0, t = x;
    for (int i = 0; i < d; ++i) {
        acc = ext.add(acc, t);
        t = ext.pow(t, Q);
    }
    return unembed(base, ext, acc);
}

}  // namespace bsym
