#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "khova/laurent.hpp"

namespace khova {

// Sparse integer matrix. Rows are stored as ordered column -> value maps;
// zero entries are never stored.
class IntMatrix {
 public:
  using Row = std::map<std::size_t, BigInt>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  // Accumulates v into entry (r, c). Throws std::out_of_range.
  void add(std::size_t r, std::size_t c, const BigInt& v);
  BigInt at(std::size_t r, std::size_t c) const;
  const Row& row(std::size_t r) const { return data_.at(r); }

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  IntMatrix transposed() const;

  // Throws std::invalid_argument on a shape mismatch.
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

// Coefficient field for rank computations: the rationals or a prime field.
class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws khova::Error when p is not prime.
  static Field prime(std::uint32_t p);
  // Accepts "q"/"Q"/"0" for the rationals, or a decimal prime.
  static Field parse(std::string_view text);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

// Exact rank over the given field. Over the rationals this runs sparse
// fraction-free elimination: every row is reduced against the current pivot
// rows by integer cross-multiplication, the row content is divided out after
// each step, and the pivot with the smaller leading magnitude is kept.
std::size_t rank(const IntMatrix& m, Field field = Field::rationals());

// Dense Bareiss elimination with pivoting by magnitude. Independent reference
// path for rank over the rationals; cubic in the matrix size.
std::size_t bareiss_rank(const IntMatrix& m);

}  // namespace khova
