#include "chevsk/lie.hpp"

#include <utility>

namespace chevsk {

LieElement::LieElement(ModMatrix m) : m_(std::move(m)) {
  if (m_.trace() != 0) throw Error(ErrorCode::InvalidElement, "trace != 0: " + m_.to_string());
}

LieElement LieElement::zero(const RingParams& params, int dim) { return LieElement(ModMatrix(params, dim)); }

LieElement LieElement::random(const RingParams& params, int dim, Rng& rng) {
  ModMatrix m(params, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.set(i, j, rng.below(params.modulus));
  const int last = dim - 1;
  m.set(last, last, mod_sub(m(last, last), m.trace(), params.modulus));
  return LieElement(std::move(m));
}

LieElement bracket(const LieElement& a, const LieElement& b) { return LieElement(a.mat() * b.mat() - b.mat() * a.mat()); }

namespace {

IntVec root_of(int dim, int a, int b) {
  IntVec v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(a)] = 1;
  v[static_cast<std::size_t>(b)] = -1;
  return v;
}

// (a, b) with root = e_a - e_b.
std::pair<int, int> root_indices(const IntVec& s) {
  int a = -1, b = -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 1 && a < 0) a = static_cast<int>(i);
    else if (s[i] == -1 && b < 0) b = static_cast<int>(i);
    else if (s[i] != 0) return {-1, -1};
  }
  return {a, b};
}

}  // namespace

ChevalleyCoords to_coords(const LieElement& a) {
  const int d = a.dim();
  const u64 mod = a.params().modulus;
  ChevalleyCoords c;
  c.params = a.params();
  c.rank = d - 1;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && a.mat()(i, j) != 0) c.phi[root_of(d, i, j)] = a.mat()(i, j);
  c.cartan.assign(static_cast<std::size_t>(d - 1), 0);
  u64 partial = 0;
  for (int r = 0; r + 1 < d; ++r) {
    partial = mod_add(partial, a.mat()(r, r), mod);
    c.cartan[static_cast<std::size_t>(r)] = partial;
  }
  return c;
}

LieElement from_coords(const ChevalleyCoords& c) {
  const int d = c.rank + 1;
  const u64 mod = c.params.modulus;
  ModMatrix m(c.params, d);
  for (const auto& [s, v] : c.phi) {
    auto [a, b] = root_indices(s);
    if (static_cast<int>(s.size()) != d || a < 0 || b < 0)
      throw Error(ErrorCode::InvalidElement, "not an A_" + std::to_string(c.rank) + " root");
    m.set(a, b, v);
  }
  for (int r = 0; r < c.rank; ++r) {
    const u64 x = c.cartan[static_cast<std::size_t>(r)];
    m.set(r, r, mod_add(m(r, r), x, mod));
    m.set(r + 1, r + 1, mod_sub(m(r + 1, r + 1), x, mod));
  }
  return LieElement(std::move(m));
}

LieElement root_vector(const RingParams& params, int dim, int a, int b) {
  if (a == b) throw Error(ErrorCode::BadParams, "root vector needs a != b");
  return LieElement(ModMatrix::unit(params, dim, a, b));
}

LieElement coroot(const RingParams& params, int dim, int r) {
  ModMatrix m(params, dim);
  m.set(r, r, 1);
  m.set_signed(r + 1, r + 1, -1);
  return LieElement(std::move(m));
}

std::vector<BracketPair> decompose_brackets(const LieElement& a, const CoveringCertificate& cert) {
  const auto& params = a.params();
  if (cert.type != RootType::A || cert.rank != a.dim() - 1 || cert.p != params.p)
    throw Error(ErrorCode::CertificateMismatch, "certificate does not match sl_" + std::to_string(a.dim()) + " mod " + std::to_string(params.p));
  if (!verify_certificate(RootSystem::build(RootType::A, cert.rank), cert, params.p))
    throw Error(ErrorCode::CertificateMismatch, "certificate does not verify");
  return decompose_brackets_unchecked(a, cert);
}

std::vector<BracketPair> decompose_brackets_unchecked(const LieElement& a, const CoveringCertificate& cert) {
  const auto& params = a.params();
  const int d = a.dim();
  const u64 mod = params.modulus;
  const ModMatrix& A = a.mat();
  std::vector<BracketPair> out;

  // Cartan part: [sum c_r E_{r,r+1}, sum E_{r+1,r}] = sum c_r h_r.
  ModMatrix x1(params, d), x2(params, d);
  bool cartan_nonzero = false;
  u64 partial = 0;
  for (int r = 0; r + 1 < d; ++r) {
    partial = mod_add(partial, A(r, r), mod);
    if (partial != 0) cartan_nonzero = true;
    x1.set(r, r + 1, partial);
    x2.set(r + 1, r, 1);
  }
  if (cartan_nonzero) out.push_back({LieElement(std::move(x1)), LieElement(std::move(x2))});

  // Each class X with witness h: [diag(h), sum a_s / (h, s) e_s] = sum a_s e_s.
  for (const auto& cls : cert.classes) {
    ModMatrix h(params, d), y(params, d);
    bool nonzero = false;
    for (const auto& s : cls.roots) {
      auto [i, j] = root_indices(s);
      const u64 coeff = A(i, j);
      if (coeff == 0) continue;
      nonzero = true;
      const u64 pairing = mod_reduce(dot(cls.witness, s), mod);
      y.set(i, j, mod_mul(coeff, mod_inverse(pairing, params), mod));
    }
    if (!nonzero) continue;
    for (int i = 0; i < d; ++i) h.set_signed(i, i, cls.witness[static_cast<std::size_t>(i)]);
    out.push_back({LieElement(std::move(h)), LieElement(std::move(y))});
  }
  return out;
}

LieElement bracket_sum(const std::vector<BracketPair>& pairs, const RingParams& params, int dim) {
  LieElement acc = LieElement::zero(params, dim);
  for (const auto& bp : pairs) acc = acc + bracket(bp.left, bp.right);
  return acc;
}

int strong_perfectness_r(const CoveringCertificate& cert) { return cert.r(); }

}  // namespace chevsk
