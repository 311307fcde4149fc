#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Exact linear algebra over the chain ring Z/p^N.

namespace pgs::zpn {

using Int = std::int64_t;
using Vec = std::vector<Int>;

Int ipow(Int base, unsigned exp);
// p-adic valuation of a nonzero residue; returns N for zero.
unsigned valuation(Int a, Int p, unsigned N);
// Inverse of a unit modulo m.
Int inverse_mod(Int a, Int m);
Int reduce(Int a, Int m);

class ModMatrix {
 public:
  ModMatrix(std::uint32_t p, unsigned N, std::size_t rows, std::size_t cols);
  static ModMatrix identity(std::uint32_t p, unsigned N, std::size_t n);
  static ModMatrix from_rows(std::uint32_t p, unsigned N,
                             const std::vector<Vec>& rows);

  std::uint32_t p() const { return p_; }
  unsigned N() const { return N_; }
  Int modulus() const { return q_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, Int value);

  ModMatrix operator*(const ModMatrix& rhs) const;
  // Column action M * v.
  Vec apply(std::span<const Int> v) const;
  ModMatrix pow(std::uint64_t e) const;
  bool is_identity() const;
  // Rank of the reduction mod p.
  std::size_t rank_mod_p() const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::uint32_t p_;
  unsigned N_;
  Int q_;
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

/// Least m >= 1 with M^m = I. Throws NotInvertible when M is singular mod p.
std::uint64_t matrix_power_order(const ModMatrix& m);

/// Canonical (Howell) echelon basis of a submodule of (Z/p^N)^dim.
///
/// Rows have strictly increasing pivot columns, each pivot equals p^v, and
/// entries above a pivot are reduced modulo it. For every row r with pivot
/// p^v, p^(N-v) r lies in the span of the later rows, which makes the form
/// unique: two generating sets of one submodule give identical bases.
class EchelonBasis {
 public:
  EchelonBasis(std::uint32_t p, unsigned N, std::size_t dim);

  std::uint32_t p() const { return p_; }
  unsigned N() const { return N_; }
  Int modulus() const { return q_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  const std::vector<unsigned>& pivot_valuations() const { return valuations_; }
  bool empty() const { return rows_.empty(); }

  // log_p of the number of elements in the span.
  unsigned log_order() const;

  friend bool operator==(const EchelonBasis&, const EchelonBasis&) = default;

 private:
  friend EchelonBasis echelonize(std::uint32_t, unsigned, std::size_t,
                                 std::span<const Vec>);
  std::uint32_t p_;
  unsigned N_;
  Int q_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<unsigned> valuations_;
};

EchelonBasis echelonize(std::uint32_t p, unsigned N, std::size_t dim,
                        std::span<const Vec> vectors);
bool submodule_member(std::span<const Int> v, const EchelonBasis& basis);

/// Invariant factor decomposition of a finite abelian p-group presented as a
/// quotient of (Z/p^N)^n, with coordinate maps in both directions.
class AbelianInvariants {
 public:
  std::uint32_t p() const { return p_; }
  unsigned N() const { return N_; }
  std::size_t ambient_rank() const { return ambient_; }
  // e_1 >= e_2 >= ... >= e_r >= 1
  const std::vector<unsigned>& exponents() const { return exponents_; }
  // p^(e_i)
  const std::vector<Int>& moduli() const { return moduli_; }
  std::size_t rank() const { return exponents_.size(); }
  unsigned log_order() const;

  // Ambient coordinates to invariant coordinates (each entry reduced mod its
  // modulus); the kernel is exactly the relation submodule.
  Vec to_canonical(std::span<const Int> x) const;
  // A lift of invariant coordinates to ambient coordinates.
  Vec from_canonical(std::span<const Int> y) const;

 private:
  friend AbelianInvariants quotient_structure(const EchelonBasis&, bool);
  std::uint32_t p_ = 0;
  unsigned N_ = 0;
  std::size_t ambient_ = 0;
  std::vector<unsigned> exponents_;
  std::vector<Int> moduli_;
  std::vector<std::size_t> slots_;  // diagonal position of each invariant
  std::vector<Vec> forward_;        // n x n, x -> x * forward
  std::vector<Vec> backward_;       // n x n, inverse of forward
};

/// Structure of (Z/p^N)^n / span(basis). With require_headroom, an invariant
/// equal to p^N (a coordinate the relations never touch) is reported as
/// ExponentTooSmall because the true quotient may need a larger modulus.
AbelianInvariants quotient_structure(const EchelonBasis& basis,
                                     bool require_headroom = false);

}  // namespace pgs::zpn
