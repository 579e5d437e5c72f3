#pragma once

// Exact integer and rational linear algebra. Integers and rationals are GMP
// values; gmpxx keeps every mpq_class result in canonical (reduced,
// positive-denominator) form.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rat>;

/// Parses "k" or "p/q" (optional leading sign). Throws Error(ParseError).
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& value);
std::string to_string(const Integer& value);

RatVec to_rat(const IntVec& v);
bool is_integral(const Rat& value);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Throws Error(DimensionMismatch) on ragged input.
  static IntMatrix from_rows(std::span<const IntVec> rows);
  static IntMatrix from_rows(std::initializer_list<IntVec> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVec row(std::size_t r) const;
  IntMatrix transpose() const;
  IntMatrix select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Integer gcd_of(std::span<const Integer> values);
bool is_zero(std::span<const Integer> v);
bool is_primitive(std::span<const Integer> v);

/// v / gcd(v). Throws Error(ZeroVector) on the zero vector.
IntVec primitive(std::span<const Integer> v);

/// Fraction-free (Bareiss) determinant. Throws Error(NonSquare).
Integer determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Nonzero diagonal entries d1 | d2 | ... , all positive.
  std::vector<Integer> invariant_factors;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
  /// Free rank of the cokernel Z^rows / im(m).
  std::size_t cokernel_free_rank() const noexcept { return rows - rank(); }
  /// Invariant factors greater than one.
  std::vector<Integer> torsion() const;
  /// Product of the invariant factors (gcd of maximal nonzero minors).
  Integer product() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Basis of the right kernel {w : m w = 0} over Q, one vector per free
/// column of the reduced row echelon form.
std::vector<RatVec> kernel_basis(const IntMatrix& m);

/// Some x with sum_j x_j * columns[j] == rhs, or nullopt if inconsistent.
/// Unique when the columns are independent.
std::optional<RatVec> solve_in_span(std::span<const IntVec> columns, std::span<const Integer> rhs);

/// Clears denominators and divides out the content: the primitive integer
/// vector on the same ray as v. Throws Error(ZeroVector).
IntVec primitive_integer_multiple(std::span<const Rat> v);

}  // namespace toric
