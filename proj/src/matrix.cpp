#include "chevsk/matrix.hpp"

#include <sstream>
#include <utility>

namespace chevsk {

ModMatrix::ModMatrix(const RingParams& params, int dim)
    : params_(params), dim_(dim), a_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0) {
  if (dim < 1) throw Error(ErrorCode::DimensionMismatch, "matrix dimension must be >= 1");
}

ModMatrix ModMatrix::identity(const RingParams& params, int dim) {
  ModMatrix m(params, dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

ModMatrix ModMatrix::from_integers(const RingParams& params, int dim, std::span<const i64> entries) {
  if (entries.size() != static_cast<std::size_t>(dim * dim))
    throw Error(ErrorCode::DimensionMismatch, "expected dim^2 entries");
  ModMatrix m(params, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.set_signed(i, j, entries[static_cast<std::size_t>(i * dim + j)]);
  return m;
}

ModMatrix ModMatrix::unit(const RingParams& params, int dim, int i, int j) {
  ModMatrix m(params, dim);
  m.set(i, j, 1);
  return m;
}

void ModMatrix::check_compatible(const ModMatrix& o) const {
  if (dim_ != o.dim_ || !(params_ == o.params_))
    throw Error(ErrorCode::DimensionMismatch, "incompatible matrices");
}

ModMatrix ModMatrix::operator+(const ModMatrix& o) const {
  ModMatrix r = *this;
  r += o;
  return r;
}

ModMatrix& ModMatrix::operator+=(const ModMatrix& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = mod_add(a_[k], o.a_[k], params_.modulus);
  return *this;
}

ModMatrix ModMatrix::operator-(const ModMatrix& o) const {
  check_compatible(o);
  ModMatrix r(params_, dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = mod_sub(a_[k], o.a_[k], params_.modulus);
  return r;
}

ModMatrix ModMatrix::operator-() const {
  ModMatrix r(params_, dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = mod_neg(a_[k], params_.modulus);
  return r;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  check_compatible(o);
  const u64 m = params_.modulus;
  const int n = dim_;
  ModMatrix r(params_, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // entries < 2^62, so each product < 2^124 and 8 of them fit in 128 bits
      u128 acc = 0;
      for (int k = 0; k < n; ++k) {
        acc += static_cast<u128>(a_[static_cast<std::size_t>(i * n + k)]) * o.a_[static_cast<std::size_t>(k * n + j)];
        if ((k & 7) == 7) acc %= m;
      }
      r.a_[static_cast<std::size_t>(i * n + j)] = static_cast<u64>(acc % m);
    }
  }
  return r;
}

ModMatrix ModMatrix::scaled(u64 c) const {
  ModMatrix r(params_, dim_);
  c %= params_.modulus;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = mod_mul(a_[k], c, params_.modulus);
  return r;
}

bool ModMatrix::is_zero() const {
  for (u64 v : a_)
    if (v != 0) return false;
  return true;
}

bool ModMatrix::is_identity() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if ((*this)(i, j) != (i == j ? 1 % params_.modulus : 0)) return false;
  return true;
}

u64 ModMatrix::trace() const {
  u64 t = 0;
  for (int i = 0; i < dim_; ++i) t = mod_add(t, (*this)(i, i), params_.modulus);
  return t;
}

u64 ModMatrix::det() const {
  const int n = dim_;
  std::vector<mpz_class> m(a_.size());
  for (std::size_t k = 0; k < a_.size(); ++k) m[k] = static_cast<unsigned long>(a_[k]);
  auto at = [&](int i, int j) -> mpz_class& { return m[static_cast<std::size_t>(i * n + j)]; };
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  mpz_class d = at(n - 1, n - 1);
  if (sign < 0) d = -d;
  return mod_reduce(d, params_.modulus);
}

ModMatrix ModMatrix::inverse() const {
  const int n = dim_;
  const u64 mod = params_.modulus;
  ModMatrix a = *this;
  ModMatrix inv = identity(params_, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (a(i, col) % params_.p != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw Error(ErrorCode::NotAUnit, "matrix is not invertible mod p");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        u64 t = a(col, j);
        a.set(col, j, a(pivot, j));
        a.set(pivot, j, t);
        t = inv(col, j);
        inv.set(col, j, inv(pivot, j));
        inv.set(pivot, j, t);
      }
    }
    const u64 s = mod_inverse(a(col, col), params_);
    for (int j = 0; j < n; ++j) {
      a.set(col, j, mod_mul(a(col, j), s, mod));
      inv.set(col, j, mod_mul(inv(col, j), s, mod));
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const u64 f = a(i, col);
      for (int j = 0; j < n; ++j) {
        a.set(i, j, mod_sub(a(i, j), mod_mul(f, a(col, j), mod), mod));
        inv.set(i, j, mod_sub(inv(i, j), mod_mul(f, inv(col, j), mod), mod));
      }
    }
  }
  return inv;
}

ModMatrix ModMatrix::reduced(int n) const {
  if (n < 1 || n > params_.N) throw Error(ErrorCode::BadPrecision, "projection precision outside [1, N]");
  const RingParams q = params_.with_precision(n);
  ModMatrix r(q, dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] % q.modulus;
  return r;
}

int ModMatrix::valuation() const {
  int v = params_.N;
  for (u64 x : a_) {
    const int vx = chevsk::valuation(x, params_);
    if (vx < v) v = vx;
  }
  return v;
}

ModMatrix ModMatrix::divided_by_p_power(int e) const {
  const u64 q = params_.power(e);
  ModMatrix r(params_, dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (a_[k] % q != 0) throw Error(ErrorCode::LevelTooLow, "entry not divisible by p^" + std::to_string(e));
    r.a_[k] = a_[k] / q;
  }
  return r;
}

std::string ModMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < dim_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < dim_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << "] mod " << params_.p << "^" << params_.N;
  return os.str();
}

}  // namespace chevsk
