#ifndef BSYM_FAMILIES_HPP
#define BSYM_FAMILIES_HPP

#include "bsym/code.hpp"

namespace bsym {

/// k x (q^k-1)/(q-1) matrix whose columns are the projective representatives
/// of F_q^k (first nonzero entry 1) in strictly increasing lexicographic
/// order, first coordinate most significant.
FqMatrix projective_column_matrix(const Field& f, int k, const Caps& caps = {});

/// k x q^k matrix of all vectors of F_q^k in lexicographic order.
FqMatrix full_column_matrix(const Field& f, int k, const Caps& caps = {});

/// Code generated by projective_column_matrix(f, k).
LinearCode simplex_code(const Field& f, int k, const Caps& caps = {});

/// Code whose parity-check matrix is projective_column_matrix(f, k).
LinearCode hamming_code(const Field& f, int k, const Caps& caps = {});

/// Closed form for d_i^j of the simplex code: min((q^k - q^{k-j})/(q-1) + i - 1, n).
long long simplex_d(long long q, int k, int i, int j);

}  // namespace bsym

#endif
