#include "chevsk/group.hpp"

#include <utility>

#include "chevsk/expolog.hpp"

namespace chevsk {

GroupElement::GroupElement(ModMatrix m) : m_(std::move(m)) {
  if (m_.det() != 1 % m_.modulus()) throw Error(ErrorCode::InvalidElement, "det != 1: " + m_.to_string());
}

GroupElement GroupElement::identity(const RingParams& params, int dim) {
  return GroupElement(ModMatrix::identity(params, dim), Unchecked{});
}

GroupElement GroupElement::trusted(ModMatrix m) { return GroupElement(std::move(m), Unchecked{}); }

int level(const GroupElement& g) {
  return (g.mat() - ModMatrix::identity(g.params(), g.dim())).valuation();
}

GroupElement project(const GroupElement& g, int n) { return GroupElement::trusted(g.mat().reduced(n)); }

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return a.inverse() * b.inverse() * a * b;
}

mpz_class sl_order(u64 p, int n, int dim) {
  if (n < 1 || dim < 1) throw Error(ErrorCode::BadParams, "sl_order needs n, dim >= 1");
  mpz_class P = static_cast<unsigned long>(p);
  mpz_class order;
  mpz_pow_ui(order.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>((n - 1) * (dim * dim - 1) + dim * (dim - 1) / 2));
  for (int k = 2; k <= dim; ++k) {
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(k));
    order *= pk - 1;
  }
  return order;
}

ModMatrix random_matrix(const RingParams& params, int dim, Rng& rng) {
  ModMatrix m(params, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.set(i, j, rng.below(params.modulus));
  return m;
}

GroupElement random_element(const RingParams& params, int dim, Rng& rng) {
  for (;;) {
    ModMatrix m = random_matrix(params, dim, rng);
    const u64 d = m.det();
    if (d % params.p == 0) continue;
    const u64 s = mod_inverse(d, params);
    for (int j = 0; j < dim; ++j) m.set(0, j, mod_mul(m(0, j), s, params.modulus));
    return GroupElement::trusted(std::move(m));
  }
}

GroupElement random_in_gamma(const RingParams& params, int dim, int m, Rng& rng) {
  return exp_trunc(LieElement::random(params, dim, rng), m);
}

GroupElement random_in_gamma_direct(const RingParams& params, int dim, int m, Rng& rng) {
  if (m < 1) throw Error(ErrorCode::BadParams, "level must be >= 1");
  if (m >= params.N) return GroupElement::identity(params, dim);
  ModMatrix g = ModMatrix::identity(params, dim) + random_matrix(params, dim, rng).scaled(params.power(m));
  const int last = dim - 1;
  // det is affine in the last diagonal entry: det = c * g_dd + e
  g.set(last, last, 0);
  const u64 e = g.det();
  u64 c = 1;
  if (dim > 1) {
    ModMatrix minor(params, dim - 1);
    for (int i = 0; i < last; ++i)
      for (int j = 0; j < last; ++j) minor.set(i, j, g(i, j));
    c = minor.det();
  }
  const u64 mod = params.modulus;
  g.set(last, last, mod_mul(mod_sub(1 % mod, e, mod), mod_inverse(c, params), mod));
  return GroupElement::trusted(std::move(g));
}

GenSet GenSet::make(std::vector<GroupElement> gens) {
  if (gens.empty()) throw Error(ErrorCode::BadParams, "generating set is empty");
  GenSet s;
  s.params = gens.front().params();
  s.dim = gens.front().dim();
  for (const auto& g : gens)
    if (!(g.params() == s.params) || g.dim() != s.dim)
      throw Error(ErrorCode::DimensionMismatch, "generators over different rings");
  s.gens = std::move(gens);
  return s;
}

GroupElement GenSet::letter(int a) const {
  if (a == 0) throw Error(ErrorCode::ZeroLetter, "letter 0");
  const auto idx = static_cast<std::size_t>(a < 0 ? -a : a);
  if (idx > gens.size())
    throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(a) + " with " + std::to_string(gens.size()) + " generators");
  const GroupElement& g = gens[idx - 1];
  return a > 0 ? g : g.inverse();
}

GenSet GenSet::projected(int n) const {
  std::vector<GroupElement> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(project(g, n));
  return make(std::move(out));
}

}  // namespace chevsk
