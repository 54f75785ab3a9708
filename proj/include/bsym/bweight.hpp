#ifndef BSYM_BWEIGHT_HPP
#define BSYM_BWEIGHT_HPP

#include <optional>
#include <string>
#include <vector>

#include "bsym/code.hpp"

namespace bsym {

// ---------------------------------------------------------------------------
// index-set combinatorics on Z_n
// ---------------------------------------------------------------------------

/// Maximal cyclic run of Z_n \ J bounded on both sides by members of J.
struct Hole {
    int start;   // first index of the run
    int length;  // run length, >= 1
    bool operator==(const Hole&) const = default;
};

struct HoleDecomposition {
    int n;
    std::vector<int> members;  // J, sorted
    std::vector<Hole> holes;   // in order of start; empty when J is empty or full
    /// At most one hole.
    bool successive() const { return holes.size() <= 1; }
};

/// J given as a sorted duplicate-free subset of Z_n.
HoleDecomposition holes_of(const std::vector<int>& J, int n);

/// Forward window J[b] = union of J+i, or backward J[-b] = union of J-i,
/// for i = 0..b-1, all mod n. Returned sorted.
std::vector<int> window_set(const std::vector<int>& J, int n, int b, bool backward);

// ---------------------------------------------------------------------------
// b-symbol weights
// ---------------------------------------------------------------------------

/// Number of cyclic length-b windows of x that are not all-zero.
int b_weight_vector(std::span<const int> x, int b);

/// b-support of a subspace D of F_q^n: window start positions at which some
/// vector of D is nonzero somewhere in the window. Computed definitionally by
/// enumerating the q^dim vectors of D (oracle-grade; CapExceeded past caps).
std::vector<int> b_support(const Subspace& D, int b, const Caps& caps = {});

/// 1-support without enumeration: union of the basis row supports.
std::vector<int> one_support(const Subspace& D);

/// |b-support| via the 1-support hole decomposition: w_b = w_1 plus |H| for
/// each hole shorter than b plus (b-1) for each hole of length >= b.
/// Independent of the enumeration in b_support.
int w_b_via_holes(const Subspace& D, int b);

/// Given w_1 and the hole lengths of the 1-support, the same quantity.
int w_b_from_holes(int n, int w1, const std::vector<int>& hole_lengths, int b);

// ---------------------------------------------------------------------------
// minimal weights and the weight matrix
// ---------------------------------------------------------------------------

/// Per-dimension exhaustive scan over the r-dimensional subcodes of C:
/// minima of w_b for every b, plus whether some minimizer has successive
/// b-support. One pass over PG^r of the message space.
struct ColumnScan {
    int r;
    std::vector<int> min_wb;    // index b = 1..n; [0] unused
    std::vector<char> succ_min; // some subspace attaining min_wb[b] < n has successive b-support
};
ColumnScan scan_subspaces(const LinearCode& C, int r, const Caps& caps = {});

/// d_b^r: minimum b-weight over r-dimensional subcodes (direct scan).
int d_b_r(const LinearCode& C, int b, int r, const Caps& caps = {});

/// Hamming weight hierarchy d_1^1..d_1^k. Uses the direct scan when within
/// caps, else the duality complement of the dual hierarchy.
std::vector<int> weight_hierarchy(const LinearCode& C, const Caps& caps = {});

struct BWeightMatrix {
    int n = 0, k = 0;
    std::vector<int> d;  // row-major, rows = b in 1..n, cols = r in 1..k
    int at(int b, int r) const { return d[(size_t)(b - 1) * k + (r - 1)]; }
    void set(int b, int r, int v) { d[(size_t)(b - 1) * k + (r - 1)] = v; }
    std::string to_text() const;  // n lines of k decimal entries
    bool operator==(const BWeightMatrix&) const = default;
};

/// Elementwise Singleton-type ceiling: entry (b, r) = min(n-k+b+r-1, n).
BWeightMatrix singleton_matrix(int n, int k);

enum class ColumnMethod { ClosedForm, Enumerated, Forced };

struct DColumn {
    int r = 0;
    ColumnMethod method = ColumnMethod::Enumerated;
    /// Cyclic interval (start, length) witnessing the closed form: the
    /// shortened code on the interval has dimension >= r.
    std::optional<std::pair<int, int>> interval;
    /// Per b: some minimizer of w_b below n has successive b-support.
    /// Meaningful only when succ_known.
    std::vector<char> succ_min;
    bool succ_known = false;
};

struct DMatrixResult {
    BWeightMatrix D;
    std::vector<int> first_row;  // d_1^r, index r = 1..k ([0] unused)
    std::vector<DColumn> columns;
    bool via_dual_hierarchy = false;
};

/**
 * The full n x k matrix of d_b^r values. Column strategy, in order:
 *  - closed form min(d_1^r + b - 1, n) when a minimizing subspace with
 *    successive 1-support exists (decided exactly by scanning the n cyclic
 *    intervals of length d_1^r for a shortened subcode of dimension >= r);
 *  - exhaustive scan when PG^r of the message space is within caps;
 *  - otherwise interval forcing from the strict-increase and upper-bound
 *    laws; CapExceeded if some entry stays undetermined.
 */
DMatrixResult d_matrix_full(const LinearCode& C, const Caps& caps = {});
BWeightMatrix d_matrix(const LinearCode& C, const Caps& caps = {});

// ---------------------------------------------------------------------------
// bound/theorem harness
// ---------------------------------------------------------------------------

struct ClauseResult {
    std::string clause;
    bool pass = true;
    bool skipped = false;
    std::string note;
};

/// Evaluate the monotonicity/bound laws that every weight matrix must
/// satisfy on the concrete D(C). A failing clause means an implementation
/// bug, not a property of the code.
std::vector<ClauseResult> check_bound_theorems(const LinearCode& C, const Caps& caps = {});

bool all_pass(const std::vector<ClauseResult>& rs);

}  // namespace bsym

#endif
