/**
 * @file lpcert.hpp
 * @brief Laurent-Poljak simplicial-face certificates for vertex families of
 *        the elliptope, decided in exact integer arithmetic.
 *
 * Given cut vectors c_1..c_r, build
 *
 *   W = [c_1 ... c_r]                                   (n x r)
 *   Z = [1 | c_i ⊙ c_j, lexicographic i<j]              (n x R,  R  = 1 + r(r-1)/2)
 *   Y = [1 - c_i ⊙ c_j, lexicographic i<j]              (n x R', R' = r(r-1)/2)
 *
 * If W and Z both have full column rank, conv{c_1c_1^t, ..., c_rc_r^t} is a
 * simplicial face of the elliptope of dimension r-1. The condition is
 * sufficient only, so the verdict vocabulary is CERTIFIED_SIMPLICIAL /
 * INCONCLUSIVE, never "not a face".
 *
 * Rank is never decided in floating point: a rank check first reduces modulo
 * a random prime above 2^30 (full rank mod p certifies full rank over the
 * rationals); on mod-p deficiency it falls back to fraction-free Bareiss
 * elimination in checked 64-bit arithmetic, escalating to arbitrary
 * precision integers if an intermediate value overflows.
 *
 * Note on the Y route: raw full column rank of Y is NOT equivalent to full
 * column rank of Z. Counterexample: cuts (1,1,1,1), (1,1,-1,-1), (-1,-1,1,-1)
 * give rank(Z) = 3 < R = 4 while Y is 4x3 of rank 3. The identity that does
 * hold, by elementary column operations (c_i ⊙ c_j = 1 - y_ij), is
 * rank(Z) = rank([1 | Y]); equivalently Z has full column rank iff Y does
 * and 1 is outside Y's column span. certify_simplicial cross-checks that
 * identity, and the universal implication z_full => y_full, on every call.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "elliptope/cutgeom.hpp"

namespace elliptope {

/// Dense row-major integer matrix; entries of the certificate matrices fit
/// comfortably in 64 bits ({-1,0,1,2}), intermediates may not (see Bareiss
/// escalation).
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;  // row-major, rows*cols entries

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * std::size_t(c), 0) {}
  std::int64_t& at(int i, int j) { return data[std::size_t(i) * std::size_t(cols) + std::size_t(j)]; }
  std::int64_t at(int i, int j) const { return data[std::size_t(i) * std::size_t(cols) + std::size_t(j)]; }
};

struct CertificateMatrices {
  int n = 0;
  int r = 0;
  int R = 0;        // 1 + r(r-1)/2
  int R_prime = 0;  // r(r-1)/2
  IntMatrix W;      // n x r
  IntMatrix Z;      // n x R
  IntMatrix Y;      // n x R'
  /// Fixed lexicographic listing of pairs (i,j), 0 <= i < j < r; column
  /// 1 + k of Z and column k of Y correspond to column_order[k].
  std::vector<std::pair<int, int>> column_order;
};

enum class Verdict { CertifiedSimplicial, Inconclusive };

struct Certificate {
  bool w_full_rank = false;
  bool z_full_rank = false;
  bool y_full_rank = false;
  /// Full column rank of [1 | Y]; provably equal to z_full_rank.
  bool y_augmented_full_rank = false;
  Verdict verdict = Verdict::Inconclusive;
  /// r - 1 when certified, empty otherwise.
  std::optional<int> face_dimension;
};

/// Builds W, Z, Y from r >= 2 cut vectors of equal length.
CertificateMatrices build_certificate_matrices(const std::vector<CutVector>& cuts);

/// Exact full-column-rank decision over the rationals (mod-p fast path,
/// fraction-free fallback). k=0 is vacuously true; 0 rows with k>0 is false.
bool is_full_column_rank(const IntMatrix& m);

/// Sufficient certificate per the W/Z rank condition; also evaluates the Y
/// route and cross-asserts the provable rank identities (throws logic_error
/// if they ever fail, which would mean a rank-checker bug).
Certificate certify_simplicial(const std::vector<CutVector>& cuts);

/// True iff every one of the 2^r sign patterns over the family is realized
/// by some coordinate ("general position"). Requires r <= 30.
bool check_general_position(const std::vector<CutVector>& cuts);

namespace detail {
/// One-sided probabilistic fast path: true means certainly full column rank
/// over Q; nullopt means rank-deficient mod the chosen prime (inconclusive).
std::optional<bool> full_column_rank_mod_prime(const IntMatrix& m, std::uint64_t prime);
/// Deterministic exact decision by fraction-free elimination.
bool full_column_rank_exact(const IntMatrix& m);
/// Draws one prime from the fixed table (> 2^30), thread-local sequence.
std::uint64_t random_prime();
}  // namespace detail

}  // namespace elliptope
