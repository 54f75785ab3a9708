#ifndef BSYM_TOWERS_HPP
#define BSYM_TOWERS_HPP

#include "bsym/code.hpp"

namespace bsym {

/// Dimension over GF(p^m) of the subcode of C whose words have every
/// component in the embedded subfield GF(p^m). Solves the membership
/// conditions exactly; no codeword enumeration. DomainError when m does not
/// divide the field degree.
int subfield_subcode_dim(const LinearCode& C, int m);

/// The subcode itself, expressed over GF(p^m). DomainError "zero code" when
/// the subcode is trivial.
LinearCode subfield_subcode(const LinearCode& C, int m);

/// Smallest divisor m of the field degree for which the GF(p^m)-subcode
/// keeps the full dimension k. Always <= e, since m = e qualifies.
int essential_number(const LinearCode& C);

/// The same generator matrix read over GF(q^m); dimension is preserved.
LinearCode extend_code(const LinearCode& C, int m);

/// Code over `base` spanned by the componentwise traces of {beta * g} for
/// the generators g and the power basis {beta} of the extension.
LinearCode trace_code(const LinearCode& C, const Field& base);

/// Minimal b-weight d_b of a code (dimension-1 minimum).
long long d_b_code(const LinearCode& C, int b, const Caps& caps = {});

struct ReductionReport {
    bool applicable = false;  // subcode over GF(p^m) has full dimension k
    int subcode_dim = 0;
    long long d_b_outer = 0;
    long long d_b_subcode = 0;
    bool equal = false;
    const char* path = "";  // which route computed d_b_outer
};

/// When the GF(p^m)-subcode has full dimension, its d_b must equal the d_b
/// of C itself; evaluates both sides.
ReductionReport check_reduction(const LinearCode& C, int m, int b, const Caps& caps = {});

}  // namespace bsym

#endif
