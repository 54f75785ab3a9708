#ifndef BSYM_MDS_HPP
#define BSYM_MDS_HPP

#include <optional>

#include "bsym/code.hpp"

namespace bsym {

enum class MdsCriterion { Direct, Generator, Parity };

struct MdsVerdict {
    bool is_mds = false;
    MdsCriterion criterion = MdsCriterion::Direct;
    long long bound = 0;  // min(n - k + b, n)
    /// First codeword (message order) with b-weight below the bound.
    std::optional<std::vector<int>> witness_codeword;
    /// First failing index set (sizes ascending, then lexicographic).
    std::optional<std::vector<int>> witness_set;
};

/// d_b^1 against the Singleton-type bound, by codeword scan.
MdsVerdict is_b_mds_direct(const LinearCode& C, int b, const Caps& caps = {});

/// Generator-side rank criterion: every index set J of size max(k-b,0)+1
/// must have rank([G_j : j in J[b]]) = k.
MdsVerdict is_b_mds_generator(const LinearCode& C, int b, const Caps& caps = {});

/// Parity-side rank criterion: every J with |J[-b]| <= min(n-k+b,n)-1 must
/// have rank([H_j : j in J]) = |J|. Only |J| <= min(n-k+b,n)-1 can qualify,
/// which prunes the scan.
MdsVerdict is_b_mds_parity(const LinearCode& C, int b, const Caps& caps = {});

/// n <= (q^k - 1)/(q - 1); a necessary condition for b-MDS when b <= k-1.
/// DomainError when b >= k (the hypothesis does not apply).
bool mds_length_bound(const LinearCode& C, int b);

/// Smallest b for which C is b-MDS (exists: b = n always qualifies).
int mds_ladder(const LinearCode& C, const Caps& caps = {});

}  // namespace bsym

#endif
