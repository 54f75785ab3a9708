#ifndef BSYM_FIELD_HPP
#define BSYM_FIELD_HPP

#include <cstdint>
#include <vector>

#include "bsym/errors.hpp"

namespace bsym {

/**
 * GF(p^e) with exact arithmetic.
 *
 * Elements are encoded as integers in [0, p^e): the base-p digits of the
 * code are the coefficients of the residue polynomial, least significant
 * digit = constant term. 0 and 1 are the additive and multiplicative
 * identities under every modulus.
 *
 * The modulus is the lexicographically smallest monic irreducible polynomial
 * of degree e over GF(p), coefficients compared from the constant term up,
 * so arithmetic is reproducible across runs. Instances are interned:
 * Field::get(p, e) always returns the same object, and object identity is
 * field identity.
 */
class Field {
  public:
    static const Field& get(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    long long q() const { return q_; }
    /// Monic modulus, length e+1, constant term first.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // DomainError "zero inverse" on 0
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, unsigned long long n) const;

    bool is(const Field& other) const { return this == &other; }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(int p, int e);

    int mul_raw(int a, int b) const;

    int p_, e_;
    long long q_;
    std::vector<int> modulus_;
    // lookup tables for small fields, empty otherwise
    std::vector<int> tab_mul_, tab_add_, tab_inv_, tab_neg_;
};

/// Checked element-of-a-field value type. Mixed-field arithmetic throws
/// "field mismatch"; inversion of zero throws "zero inverse".
class Fe {
  public:
    Fe(const Field& f, int repr) : f_(&f), v_(repr) {
        if (repr < 0 || repr >= f.q()) throw DomainError("element repr out of range");
    }
    const Field& field() const { return *f_; }
    int repr() const { return v_; }

    Fe operator+(const Fe& o) const { return Fe(*f_, f_->add(v_, same(o).v_)); }
    Fe operator-(const Fe& o) const { return Fe(*f_, f_->sub(v_, same(o).v_)); }
    Fe operator*(const Fe& o) const { return Fe(*f_, f_->mul(v_, same(o).v_)); }
    Fe operator/(const Fe& o) const { return Fe(*f_, f_->div(v_, same(o).v_)); }
    Fe operator-() const { return Fe(*f_, f_->neg(v_)); }
    Fe inv() const { return Fe(*f_, f_->inv(v_)); }
    bool operator==(const Fe& o) const { return f_ == o.f_ && v_ == o.v_; }

  private:
    const Fe& same(const Fe& o) const {
        if (f_ != o.f_) throw DomainError("field mismatch");
        return o;
    }
    const Field* f_;
    int v_;
};

/// True when `base` is a subfield of `ext` (same characteristic, degree divides).
bool is_subfield(const Field& base, const Field& ext);

/// Deterministic embedding of base into ext: the generator of base is sent to
/// the smallest-repr root of base's modulus inside ext.
int embed(const Field& base, const Field& ext, int x);

/// Inverse of embed(); DomainError when x is not in the embedded image.
int unembed(const Field& base, const Field& ext, int x);

bool in_embedded_subfield(const Field& base, const Field& ext, int x);

/// Trace of x in ext relative to base, re-expressed in base.
/// DomainError "not a subfield" when the tower is invalid.
int trace(const Field& ext, const Field& base, int x);

}  // namespace bsym

#endif
