#ifndef BSYM_CODE_HPP
#define BSYM_CODE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "bsym/matrix.hpp"

namespace bsym {

/// Enumeration limits. Exceeding one raises CapExceeded instead of hanging.
struct Caps {
    long long max_codewords = 1LL << 16;  // bound on q^k scans
    long long max_subspaces = 1LL << 20;  // bound on subspace/subset scans
};

/**
 * An [n,k] linear code held by a canonical full-rank RREF generator matrix,
 * with the parity-check matrix cached. The object identifies the subspace:
 * two codes built from row-equivalent generators compare equal.
 */
class LinearCode {
  public:
    /// Rows may be dependent; they are reduced. DomainError "zero code" when rank 0.
    static LinearCode from_generator(const FqMatrix& g);
    /// Code = right kernel of h. DomainError "zero code" when the kernel is trivial.
    static LinearCode from_parity(const FqMatrix& h);

    const Field& field() const { return gen_.field(); }
    int n() const { return gen_.cols(); }
    int k() const { return gen_.rows(); }
    const FqMatrix& generator() const { return gen_; }
    const FqMatrix& check() const { return check_; }

    /// DomainError "zero dual" when k == n.
    LinearCode dual() const;

    std::vector<int> encode(std::span<const int> msg) const { return vec_mat(msg, gen_); }

    bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }

  private:
    LinearCode(FqMatrix gen, FqMatrix check) : gen_(std::move(gen)), check_(std::move(check)) {}
    FqMatrix gen_;    // k x n RREF, full rank
    FqMatrix check_;  // (n-k) x n RREF, full rank
};

/// Number of r-dimensional subspaces of a k-dimensional space over GF(q).
/// Exact; 1 when r == 0, 0 when r > k.
long long gaussian_binomial(long long q, int r, int k);

/// Same, but nullopt instead of throwing when the value exceeds long long.
std::optional<long long> gaussian_binomial_checked(long long q, int r, int k);

/// All r-dimensional subspaces of F_q^ambient, canonical RREF bases, sorted
/// lexicographically by basis entries. CapExceeded "enumeration too large"
/// past caps.max_subspaces.
std::vector<Subspace> enumerate_pg(const Field& f, int ambient, int r, const Caps& caps = {});

/**
 * The indexed ordering of PG^r(F_q^k) used by the incidence machinery:
 * plain lexicographic for r <= k/2, and for r > k/2 the mirror image under
 * orthocomplement of the PG^{k-r} ordering, so that position i of PG^{k-r}
 * and position i of PG^r are orthocomplements of each other.
 */
std::vector<Subspace> pg_ordered(const Field& f, int k, int r, const Caps& caps = {});

/// Visit the canonical RREF basis of every r-dimensional subspace of F_q^k.
/// `rows` holds the basis (r rows of length k); `row_codes[i]` is the
/// lexicographic rank of row i among all vectors (first entry most
/// significant). Enumeration order is deterministic but unspecified.
void visit_rref_bases(
    const Field& f, int k, int r,
    const std::function<void(const std::vector<std::vector<int>>& rows,
                             const std::vector<long long>& row_codes)>& fn);

/**
 * Deterministic codeword stream: messages in lexicographic order (first
 * coordinate most significant), codeword = msg * G. Yields all q^k words
 * starting with 0. CapExceeded when q^k > caps.max_codewords.
 */
class CodewordSeq {
  public:
    CodewordSeq(const LinearCode& c, const Caps& caps = {});
    /// False once exhausted.
    bool next(std::vector<int>& msg, std::vector<int>& codeword);
    long long count() const { return total_; }

  private:
    const LinearCode* c_;
    std::vector<int> msg_;
    std::vector<int> word_;
    long long total_, emitted_;
};

/// q^k as long long, or nullopt on overflow past `limit`.
std::optional<long long> pow_checked(long long q, int k, long long limit);

}  // namespace bsym

#endif
