#pragma once

#include <span>
#include <string>
#include <vector>

#include "chevsk/modarith.hpp"

namespace chevsk {

// Square matrix over Z/p^N Z with canonical entries, row-major.
class ModMatrix {
 public:
  ModMatrix(const RingParams& params, int dim);

  static ModMatrix identity(const RingParams& params, int dim);
  static ModMatrix from_integers(const RingParams& params, int dim, std::span<const i64> entries);
  // E_{ij}: single 1 at (i, j), 0-based.
  static ModMatrix unit(const RingParams& params, int dim, int i, int j);

  int dim() const { return dim_; }
  const RingParams& params() const { return params_; }
  u64 modulus() const { return params_.modulus; }

  u64 operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * dim_ + j)]; }
  void set(int i, int j, u64 canonical) { a_[static_cast<std::size_t>(i * dim_ + j)] = canonical % params_.modulus; }
  void set_signed(int i, int j, i64 x) { a_[static_cast<std::size_t>(i * dim_ + j)] = mod_reduce(x, params_.modulus); }
  std::span<const u64> entries() const { return a_; }

  ModMatrix operator+(const ModMatrix& o) const;
  ModMatrix operator-(const ModMatrix& o) const;
  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix operator-() const;
  ModMatrix scaled(u64 c) const;
  ModMatrix& operator+=(const ModMatrix& o);

  bool operator==(const ModMatrix& o) const = default;

  bool is_zero() const;
  bool is_identity() const;
  u64 trace() const;

  // Fraction-free (Bareiss) elimination over the integer lift, reduced at the end.
  u64 det() const;

  // Gauss-Jordan with unit pivots. Throws NotAUnit if det is not a unit.
  ModMatrix inverse() const;

  // Entrywise reduction to precision n <= N.
  ModMatrix reduced(int n) const;
  // Entrywise min valuation; N for the zero matrix.
  int valuation() const;
  // Exact division by p^e of a matrix whose entries are all divisible by p^e.
  ModMatrix divided_by_p_power(int e) const;

  std::string to_string() const;

 private:
  void check_compatible(const ModMatrix& o) const;

  RingParams params_;
  int dim_;
  std::vector<u64> a_;
};

}  // namespace chevsk
