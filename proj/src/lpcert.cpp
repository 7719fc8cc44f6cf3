#include "elliptope/lpcert.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace elliptope {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Signals that 64-bit Bareiss overflowed and the computation must be redone
// with arbitrary precision.
struct Int64Overflow {};

struct CheckedInt64 {
  std::int64_t v = 0;
  CheckedInt64() = default;
  CheckedInt64(std::int64_t x) : v(x) {}
  friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a.v, b.v, &out)) throw Int64Overflow{};
    return CheckedInt64(out);
  }
  friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a.v, b.v, &out)) throw Int64Overflow{};
    return CheckedInt64(out);
  }
  friend CheckedInt64 operator/(CheckedInt64 a, CheckedInt64 b) {
    // exact division by construction in Bareiss; INT64_MIN / -1 is the one
    // representable-overflow case
    if (a.v == INT64_MIN && b.v == -1) throw Int64Overflow{};
    return CheckedInt64(a.v / b.v);
  }
  bool is_zero() const { return v == 0; }
};

struct BigIntCell {
  BigInt v;
  BigIntCell() = default;
  BigIntCell(std::int64_t x) : v(x) {}
  friend BigIntCell operator*(const BigIntCell& a, const BigIntCell& b) { return {BigInt(a.v * b.v)}; }
  friend BigIntCell operator-(const BigIntCell& a, const BigIntCell& b) { return {BigInt(a.v - b.v)}; }
  friend BigIntCell operator/(const BigIntCell& a, const BigIntCell& b) { return {BigInt(a.v / b.v)}; }
  bool is_zero() const { return v == 0; }
  BigIntCell(BigInt x) : v(std::move(x)) {}
};

// Fraction-free (Bareiss) elimination with complete pivoting; returns true
// iff the matrix has full column rank. Every intermediate entry is a minor
// of the original matrix, so the division in the update rule is exact.
template <typename Cell>
bool bareiss_full_column_rank(const IntMatrix& m) {
  const int rows = m.rows, cols = m.cols;
  auto w = std::vector<std::vector<Cell>>(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    w[std::size_t(i)].reserve(std::size_t(cols));
    for (int j = 0; j < cols; ++j) w[std::size_t(i)].push_back(Cell(m.at(i, j)));
  }
  Cell prev_pivot(1);
  for (int t = 0; t < cols; ++t) {
    int pr = -1, pc = -1;
    for (int i = t; i < rows && pr < 0; ++i) {
      for (int j = t; j < cols; ++j) {
        if (!w[std::size_t(i)][std::size_t(j)].is_zero()) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr < 0) return false;  // remaining submatrix is zero, rank = t < cols
    std::swap(w[std::size_t(t)], w[std::size_t(pr)]);
    if (pc != t) {
      for (int i = 0; i < rows; ++i) std::swap(w[std::size_t(i)][std::size_t(t)], w[std::size_t(i)][std::size_t(pc)]);
    }
    const Cell pivot = w[std::size_t(t)][std::size_t(t)];
    for (int i = t + 1; i < rows; ++i) {
      for (int j = t + 1; j < cols; ++j) {
        w[std::size_t(i)][std::size_t(j)] =
            (w[std::size_t(i)][std::size_t(j)] * pivot - w[std::size_t(i)][std::size_t(t)] * w[std::size_t(t)][std::size_t(j)]) / prev_pivot;
      }
      w[std::size_t(i)][std::size_t(t)] = Cell(0);
    }
    prev_pivot = pivot;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t out = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) out = out * base % mod;  // operands < 2^31, product < 2^62
    base = base * base % mod;
    exp >>= 1;
  }
  return out;
}

}  // namespace

namespace detail {

std::uint64_t random_prime() {
  static const std::uint64_t kPrimes[] = {
      1073741827ULL, 1073741831ULL, 1073741833ULL, 1073741839ULL,
      1073741843ULL, 1073741857ULL, 1073741891ULL, 1073741909ULL,
      1073741939ULL, 1073741953ULL, 1073741969ULL, 1073741971ULL,
  };
  thread_local std::mt19937_64 gen(0x5D1F00D5EEDULL);
  return kPrimes[gen() % std::size(kPrimes)];
}

std::optional<bool> full_column_rank_mod_prime(const IntMatrix& m, std::uint64_t p) {
  const int rows = m.rows, cols = m.cols;
  if (cols == 0) return true;
  if (rows < cols) return false;  // rank <= rows < cols unconditionally
  auto w = std::vector<std::vector<std::uint64_t>>(static_cast<std::size_t>(rows), std::vector<std::uint64_t>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      std::int64_t v = m.at(i, j) % std::int64_t(p);
      if (v < 0) v += std::int64_t(p);
      w[std::size_t(i)][std::size_t(j)] = std::uint64_t(v);
    }
  }
  int row = 0;
  for (int col = 0; col < cols; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i) {
      if (w[std::size_t(i)][std::size_t(col)] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;  // deficient mod p: inconclusive over Q
    std::swap(w[std::size_t(row)], w[std::size_t(pivot)]);
    const std::uint64_t inv = mod_pow(w[std::size_t(row)][std::size_t(col)], p - 2, p);
    for (int i = row + 1; i < rows; ++i) {
      const std::uint64_t f = w[std::size_t(i)][std::size_t(col)] * inv % p;
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) {
        const std::uint64_t sub = f * w[std::size_t(row)][std::size_t(j)] % p;
        w[std::size_t(i)][std::size_t(j)] = (w[std::size_t(i)][std::size_t(j)] + p - sub) % p;
      }
    }
    ++row;
  }
  return true;
}

bool full_column_rank_exact(const IntMatrix& m) {
  if (m.cols == 0) return true;
  if (m.rows < m.cols) return false;
  try {
    return bareiss_full_column_rank<CheckedInt64>(m);
  } catch (const Int64Overflow&) {
    return bareiss_full_column_rank<BigIntCell>(m);
  }
}

}  // namespace detail

bool is_full_column_rank(const IntMatrix& m) {
  if (m.cols == 0) return true;
  if (m.rows == 0 || m.rows < m.cols) return false;
  if (auto fast = detail::full_column_rank_mod_prime(m, detail::random_prime())) {
    return *fast;  // full rank mod p certifies full rank over Q
  }
  return detail::full_column_rank_exact(m);
}

CertificateMatrices build_certificate_matrices(const std::vector<CutVector>& cuts) {
  const int r = static_cast<int>(cuts.size());
  if (r < 2) throw std::invalid_argument("build_certificate_matrices: need r >= 2 cut vectors");
  const int n = cuts[0].size();
  for (const CutVector& c : cuts) {
    if (c.size() != n) throw std::invalid_argument("build_certificate_matrices: mixed cut-vector lengths");
  }

  CertificateMatrices out;
  out.n = n;
  out.r = r;
  out.R_prime = r * (r - 1) / 2;
  out.R = 1 + out.R_prime;
  out.W = IntMatrix(n, r);
  out.Z = IntMatrix(n, out.R);
  out.Y = IntMatrix(n, out.R_prime);
  out.column_order.reserve(std::size_t(out.R_prime));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) out.column_order.emplace_back(i, j);

  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < r; ++i) out.W.at(t, i) = cuts[std::size_t(i)][t];
    out.Z.at(t, 0) = 1;
    for (int k = 0; k < out.R_prime; ++k) {
      const auto [i, j] = out.column_order[std::size_t(k)];
      const std::int64_t prod = std::int64_t(cuts[std::size_t(i)][t]) * std::int64_t(cuts[std::size_t(j)][t]);
      out.Z.at(t, 1 + k) = prod;
      out.Y.at(t, k) = 1 - prod;
    }
  }
  return out;
}

Certificate certify_simplicial(const std::vector<CutVector>& cuts) {
  const CertificateMatrices cm = build_certificate_matrices(cuts);

  Certificate cert;
  cert.w_full_rank = is_full_column_rank(cm.W);
  cert.z_full_rank = is_full_column_rank(cm.Z);
  cert.y_full_rank = is_full_column_rank(cm.Y);

  IntMatrix y_aug(cm.n, cm.R);
  for (int t = 0; t < cm.n; ++t) {
    y_aug.at(t, 0) = 1;
    for (int k = 0; k < cm.R_prime; ++k) y_aug.at(t, 1 + k) = cm.Y.at(t, k);
  }
  cert.y_augmented_full_rank = is_full_column_rank(y_aug);

  // Provable cross-checks of the two routes (see header).
  if (cert.z_full_rank && !cert.y_full_rank) {
    throw std::logic_error("certify_simplicial: rank checker bug (Z full but Y deficient)");
  }
  if (cert.z_full_rank != cert.y_augmented_full_rank) {
    throw std::logic_error("certify_simplicial: rank checker bug (rank Z != rank [1|Y])");
  }

  if (cert.w_full_rank && cert.z_full_rank) {
    cert.verdict = Verdict::CertifiedSimplicial;
    cert.face_dimension = cm.r - 1;
  }
  return cert;
}

bool check_general_position(const std::vector<CutVector>& cuts) {
  const int r = static_cast<int>(cuts.size());
  if (r < 1) throw std::invalid_argument("check_general_position: need r >= 1");
  if (r > 30) throw std::invalid_argument("check_general_position: r > 30 not supported (needs 2^r patterns)");
  const int n = cuts[0].size();
  for (const CutVector& c : cuts) {
    if (c.size() != n) throw std::invalid_argument("check_general_position: mixed cut-vector lengths");
  }
  const std::uint32_t want = 1u << r;
  if (std::uint64_t(n) < want) return false;  // fewer coordinates than patterns
  std::unordered_set<std::uint32_t> seen;
  seen.reserve(std::size_t(want) < 1024 ? std::size_t(want) : 1024);
  for (int t = 0; t < n; ++t) {
    std::uint32_t pattern = 0;
    for (int i = 0; i < r; ++i) {
      if (cuts[std::size_t(i)][t] > 0) pattern |= (1u << i);
    }
    seen.insert(pattern);
    if (seen.size() == want) return true;
  }
  return false;
}

}  // namespace elliptope
