#ifndef BSYM_ISOMETRY_HPP
#define BSYM_ISOMETRY_HPP

#include <map>
#include <optional>

#include "bsym/bweight.hpp"
#include "bsym/code.hpp"

namespace bsym {

/// Exact fraction on long long, always normalized (gcd 1, positive denominator).
struct Rat {
    long long num = 0;
    long long den = 1;
    Rat() = default;
    Rat(long long n, long long d = 1);
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    bool operator==(const Rat& o) const = default;
    std::string str() const;
};

/**
 * For a generator matrix G and window length b: the cyclic column-window
 * spans S_j = <G_j,...,G_{j+b-1}> (subspaces of the message space F_q^k)
 * and the multiplicity of each distinct span.
 */
struct WindowCensus {
    int b = 0;
    std::vector<Subspace> spans;      // per window start, length n
    std::map<Subspace, int> counts;   // canonical span -> multiplicity
    int multiplicity(const Subspace& v) const {
        auto it = counts.find(v);
        return it == counts.end() ? 0 : it->second;
    }
};

WindowCensus window_census(const FqMatrix& G, int b);

/// Number of windows whose span lies inside U.
int windows_inside(const WindowCensus& census, const Subspace& U);

/// d_b^r through the census: n minus the maximal number of windows inside
/// the orthocomplement of an r-dimensional message subspace. An independent
/// computation path for d_b_r.
int d_b_r_via_census(const LinearCode& C, int b, int r, const Caps& caps = {});

/// 0/1 containment matrix between the indexed orderings of PG^r and PG^s.
struct IncidenceMatrix {
    long long q = 0;
    int k = 0, r = 0, s = 0;
    int rows = 0, cols = 0;
    std::vector<char> t;  // row-major
    int at(int i, int j) const { return t[(size_t)i * cols + j]; }
};

IncidenceMatrix t_matrix(const Field& f, int k, int r, int s, const Caps& caps = {});

/**
 * For each 1-dimensional V_i in the indexed PG^1 order, the census sum
 *     sum over spans V with V_i <= V, dim V <= s   of  m(V) / q^dim(V),
 * where s = min(b, k-1). The quantity that must shift by a constant under a
 * b-weight-preserving isomorphism.
 */
std::vector<Rat> census_point_sums(const WindowCensus& census, const Field& f, int k,
                                   const Caps& caps = {});

/// Same totals computed per window as q^-rank(window); no dimension cutoff,
/// so it can differ from census_point_sums when some window spans the whole
/// message space (only possible for b >= k).
std::vector<Rat> census_point_sums_by_window(const FqMatrix& G, int b, const Caps& caps = {});

struct PointSumComparison {
    bool cutoff_active = false;  // some window span has dim > min(b, k-1)
    bool equal = false;
};
PointSumComparison compare_point_sum_paths(const FqMatrix& G, int b, const Caps& caps = {});

/**
 * Decision for "the linear isomorphism sending the rows of G to `images`
 * preserves b-weights": the per-point census sums of G and of the image
 * matrix must differ by a constant, and one nonzero codeword must keep its
 * weight. DomainError "not an isomorphism" when the images are dependent or
 * do not span C_tilde.
 */
struct PreserveReport {
    bool sums_constant = false;
    Rat constant;                 // the common difference when sums_constant
    int witness_weight = 0;       // w_b of the first generator row
    int witness_image_weight = 0;
    bool preserves = false;
};

PreserveReport preserves_b_weight(const LinearCode& C, const LinearCode& C_tilde,
                                  const FqMatrix& images, int b, const Caps& caps = {});

/// Oracle: compare w_b of every codeword with its image. CapExceeded past caps.
bool brute_force_preserves(const LinearCode& C, const FqMatrix& images, int b,
                           const Caps& caps = {});

/// phi(x) = x M for the monomial matrix M that scales coordinate u by
/// scale[perm[u]] and moves it to position perm[u].
struct Monomial {
    std::vector<int> perm;   // u -> position of u's image
    std::vector<int> scale;  // indexed by target position
};

/// The monomial matrix M with images = G * M, if one exists; deterministic
/// (lexicographically smallest permutation). Nullopt when none exists.
std::optional<Monomial> find_monomial(const LinearCode& C, const FqMatrix& images);

/// Incidence-matrix identities in exact rationals for all 1 <= r <= s <= z <= k:
/// constant column sums, the explicit inverse of T_{1,k-1}, the two product
/// identities against T_{1,k-1}, and the triple-product collapse.
std::vector<ClauseResult> check_incidence_identities(const Field& f, int k,
                                                     const Caps& caps = {});

}  // namespace bsym

#endif
