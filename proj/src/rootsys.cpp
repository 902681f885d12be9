#include "chevsk/rootsys.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "chevsk/rng.hpp"

namespace chevsk {

RootType parse_root_type(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return RootType::A;
      case 'B': case 'b': return RootType::B;
      case 'C': case 'c': return RootType::C;
      case 'D': case 'd': return RootType::D;
      case 'E': case 'e': return RootType::E;
      case 'F': case 'f': return RootType::F;
      case 'G': case 'g': return RootType::G;
      default: break;
    }
  }
  throw Error(ErrorCode::InvalidType, "unknown root type '" + s + "'");
}

char to_char(RootType t) { return static_cast<char>(t); }

i64 dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vectors of different length");
  i64 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

IntVec basis_combo(int dim, std::initializer_list<std::pair<int, i64>> terms) {
  IntVec v(static_cast<std::size_t>(dim), 0);
  for (auto [i, c] : terms) v[static_cast<std::size_t>(i)] += c;
  return v;
}

// +-s*e_i +- s*e_j for i < j.
void add_pair_roots(std::vector<IntVec>& out, int dim, int count, i64 s) {
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      for (i64 a : {s, -s})
        for (i64 b : {s, -s}) out.push_back(basis_combo(dim, {{i, a}, {j, b}}));
}

// All (+-1)^dim vectors; parity 0 keeps an even number of minus signs, -1 keeps all.
void add_sign_vectors(std::vector<IntVec>& out, int dim, int parity) {
  for (int mask = 0; mask < (1 << dim); ++mask) {
    const int minus = __builtin_popcount(static_cast<unsigned>(mask));
    if (parity == 0 && minus % 2 != 0) continue;
    IntVec v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
    out.push_back(std::move(v));
  }
}

std::vector<IntVec> e8_simple_roots() {
  std::vector<IntVec> s;
  s.push_back({1, -1, -1, -1, -1, -1, -1, 1});
  s.push_back(basis_combo(8, {{0, 2}, {1, 2}}));
  for (int i = 0; i < 6; ++i) s.push_back(basis_combo(8, {{i + 1, 2}, {i, -2}}));
  return s;
}

}  // namespace

std::size_t RootSystem::expected_size(RootType type, int l) {
  const auto L = static_cast<std::size_t>(l);
  switch (type) {
    case RootType::A: return L * (L + 1);
    case RootType::B: case RootType::C: return 2 * L * L;
    case RootType::D: return 2 * L * (L - 1);
    case RootType::E: return l == 6 ? 72 : l == 7 ? 126 : 240;
    case RootType::F: return 48;
    case RootType::G: return 12;
  }
  return 0;
}

RootSystem RootSystem::build(RootType type, int l) {
  const bool ok = (type == RootType::A && l >= 1) || ((type == RootType::B || type == RootType::C) && l >= 2) ||
                  (type == RootType::D && l >= 3) || (type == RootType::E && l >= 6 && l <= 8) ||
                  (type == RootType::F && l == 4) || (type == RootType::G && l == 2);
  if (!ok)
    throw Error(ErrorCode::InvalidType, std::string(1, to_char(type)) + std::to_string(l) + " is not a valid type");

  RootSystem rs;
  rs.type = type;
  rs.rank = l;
  switch (type) {
    case RootType::A: {
      const int d = l + 1;
      rs.embed_dim = d;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) rs.roots.push_back(basis_combo(d, {{i, 1}, {j, -1}}));
      for (int i = 0; i < l; ++i) rs.simple_roots.push_back(basis_combo(d, {{i, 1}, {i + 1, -1}}));
      break;
    }
    case RootType::B:
    case RootType::C:
    case RootType::D: {
      rs.embed_dim = l;
      const i64 single = type == RootType::C ? 2 : 1;
      if (type != RootType::D)
        for (int i = 0; i < l; ++i)
          for (i64 s : {single, -single}) rs.roots.push_back(basis_combo(l, {{i, s}}));
      add_pair_roots(rs.roots, l, l, 1);
      for (int i = 0; i + 1 < l; ++i) rs.simple_roots.push_back(basis_combo(l, {{i, 1}, {i + 1, -1}}));
      if (type == RootType::D)
        rs.simple_roots.push_back(basis_combo(l, {{l - 2, 1}, {l - 1, 1}}));
      else
        rs.simple_roots.push_back(basis_combo(l, {{l - 1, single}}));
      break;
    }
    case RootType::G: {
      rs.embed_dim = 3;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) rs.roots.push_back(basis_combo(3, {{i, 1}, {j, -1}}));
      for (int i = 0; i < 3; ++i)
        for (i64 s : {1, -1}) {
          IntVec v(3, -s);
          v[static_cast<std::size_t>(i)] = 2 * s;
          rs.roots.push_back(v);
        }
      rs.simple_roots.push_back({1, -1, 0});
      rs.simple_roots.push_back({-2, 1, 1});
      break;
    }
    case RootType::F: {
      rs.embed_dim = 4;
      for (int i = 0; i < 4; ++i)
        for (i64 s : {2, -2}) rs.roots.push_back(basis_combo(4, {{i, s}}));
      add_pair_roots(rs.roots, 4, 4, 2);
      add_sign_vectors(rs.roots, 4, -1);
      rs.simple_roots = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
    }
    case RootType::E: {
      rs.embed_dim = 8;
      std::vector<IntVec> e8;
      add_pair_roots(e8, 8, 8, 2);
      add_sign_vectors(e8, 8, 0);
      for (auto& v : e8) {
        if (l <= 7 && v[6] + v[7] != 0) continue;
        if (l == 6 && v[5] != v[6]) continue;
        rs.roots.push_back(v);
      }
      auto simple = e8_simple_roots();
      simple.resize(static_cast<std::size_t>(l));
      rs.simple_roots = simple;
      break;
    }
  }
  std::sort(rs.roots.begin(), rs.roots.end());
  return rs;
}

std::string RootSystem::label() const { return std::string(1, to_char(type)) + std::to_string(rank); }

bool RootSystem::contains(const IntVec& v) const { return std::binary_search(roots.begin(), roots.end(), v); }

std::optional<IntVec> RootSystem::simple_coefficients(const IntVec& root) const {
  using Q = boost::rational<i64>;
  const std::size_t n = simple_roots.size();
  // Normal equations with the Gram matrix of the simple roots (nonsingular).
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = dot(simple_roots[i], simple_roots[j]);
    m[i][n] = dot(simple_roots[i], root);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].numerator() == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[c], m[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].numerator() == 0) continue;
      const Q f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  IntVec coeffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Q c = m[i][n] / m[i][i];
    if (c.denominator() != 1) return std::nullopt;
    coeffs[i] = c.numerator();
  }
  IntVec back(root.size(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < root.size(); ++j) back[j] += coeffs[i] * simple_roots[i][j];
  if (back != root) return std::nullopt;
  return coeffs;
}

int nominal_classes(RootType type) { return type == RootType::A || type == RootType::G ? 1 : 2; }

namespace {

bool is_unit_pairing(i64 v, u64 p) { return v % static_cast<i64>(p) != 0; }

// Assign each root to the first witness that covers it. Returns nullopt if
// some root is uncovered. Empty classes are dropped.
std::optional<CoveringCertificate> partition_by_witnesses(const RootSystem& rs, u64 p,
                                                          const std::vector<IntVec>& witnesses) {
  CoveringCertificate cert;
  cert.type = rs.type;
  cert.rank = rs.rank;
  cert.p = p;
  std::vector<CoverClass> classes(witnesses.size());
  for (std::size_t t = 0; t < witnesses.size(); ++t) classes[t].witness = witnesses[t];
  for (const auto& s : rs.roots) {
    bool placed = false;
    for (std::size_t t = 0; t < witnesses.size() && !placed; ++t) {
      if (is_unit_pairing(dot(witnesses[t], s), p)) {
        classes[t].roots.push_back(s);
        placed = true;
      }
    }
    if (!placed) return std::nullopt;
  }
  for (auto& c : classes)
    if (!c.roots.empty()) cert.classes.push_back(std::move(c));
  recompute_pairings(cert);
  return cert;
}

// Symmetric small integers 0, 1, -1, 2, -2, ...; first `count` of them.
IntVec symmetric_sequence(int count, bool skip_zero) {
  IntVec v;
  i64 k = skip_zero ? 1 : 0;
  bool positive_next = true;
  if (!skip_zero) {
    v.push_back(0);
    k = 1;
  }
  while (static_cast<int>(v.size()) < count) {
    if (positive_next) {
      v.push_back(k);
    } else {
      v.push_back(-k);
      ++k;
    }
    positive_next = !positive_next;
  }
  return v;
}

std::vector<i64> recipe_class1_values(RootType type) {
  switch (type) {
    case RootType::B: case RootType::C: case RootType::D: return {-2, -1, 1, 2};
    case RootType::F: return {-4, -2, -1, 1, 2, 4};
    case RootType::E: return {-8, -4, -2, 2, 4, 8};
    default: return {};
  }
}

// Joint backtracking over (h1_c, h2_c) per coordinate: every root must either
// pair with h1 to a value in `allowed` (as an integer) or pair with h2 to a unit.
struct RecipeSearch {
  const RootSystem& rs;
  u64 p;
  std::vector<i64> allowed;
  u64 node_cap;
  u64 nodes = 0;
  bool capped = false;
  std::vector<std::vector<const IntVec*>> closing;  // roots whose last support coord is c
  IntVec h1, h2;
  std::vector<i64> h1_values, h2_values;

  RecipeSearch(const RootSystem& r, u64 prime, std::vector<i64> allow, u64 cap)
      : rs(r), p(prime), allowed(std::move(allow)), node_cap(cap) {
    closing.resize(static_cast<std::size_t>(rs.embed_dim));
    for (const auto& s : rs.roots) {
      int last = 0;
      for (int c = 0; c < rs.embed_dim; ++c)
        if (s[static_cast<std::size_t>(c)] != 0) last = c;
      closing[static_cast<std::size_t>(last)].push_back(&s);
    }
    h1_values = {1, 0, -1, 2, -2};
    h2_values = symmetric_sequence(static_cast<int>(p), false);
    h1.assign(static_cast<std::size_t>(rs.embed_dim), 0);
    h2.assign(static_cast<std::size_t>(rs.embed_dim), 0);
  }

  bool root_ok(const IntVec& s) const {
    const i64 a = dot(h1, s);
    if (std::find(allowed.begin(), allowed.end(), a) != allowed.end()) return true;
    return is_unit_pairing(dot(h2, s), p);
  }

  bool run(int c) {
    if (c == rs.embed_dim) return true;
    for (i64 a : h1_values) {
      for (i64 b : h2_values) {
        if (++nodes > node_cap) {
          capped = true;
          return false;
        }
        h1[static_cast<std::size_t>(c)] = a;
        h2[static_cast<std::size_t>(c)] = b;
        bool ok = true;
        for (const IntVec* s : closing[static_cast<std::size_t>(c)])
          if (!root_ok(*s)) {
            ok = false;
            break;
          }
        if (ok && run(c + 1)) return true;
        if (capped) return false;
      }
    }
    h1[static_cast<std::size_t>(c)] = 0;
    h2[static_cast<std::size_t>(c)] = 0;
    return false;
  }
};

// Backtracking over per-coordinate vectors v_c in [-(p-1)/2, (p-1)/2]^k; a
// root is covered when some component of sum_c s_c v_c is nonzero mod p. For
// type A the last coordinate is forced to make every witness sum to zero.
struct CoverSearch {
  const RootSystem& rs;
  u64 p;
  int k;
  u64 node_cap;
  u64 nodes = 0;
  bool capped = false;
  bool zero_sum;
  std::vector<std::vector<const IntVec*>> closing;
  std::vector<IntVec> witnesses;  // k vectors of length embed_dim
  std::vector<IntVec> tuples;     // candidate values for one coordinate

  CoverSearch(const RootSystem& r, u64 prime, int classes, u64 cap)
      : rs(r), p(prime), k(classes), node_cap(cap), zero_sum(r.type == RootType::A) {
    closing.resize(static_cast<std::size_t>(rs.embed_dim));
    for (const auto& s : rs.roots) {
      int last = 0;
      for (int c = 0; c < rs.embed_dim; ++c)
        if (s[static_cast<std::size_t>(c)] != 0) last = c;
      closing[static_cast<std::size_t>(last)].push_back(&s);
    }
    witnesses.assign(static_cast<std::size_t>(k), IntVec(static_cast<std::size_t>(rs.embed_dim), 0));
    const IntVec vals = symmetric_sequence(static_cast<int>(p), false);
    IntVec cur(static_cast<std::size_t>(k));
    build_tuples(vals, cur, 0);
    std::stable_sort(tuples.begin(), tuples.end(), [](const IntVec& a, const IntVec& b) {
      i64 sa = 0, sb = 0;
      for (i64 x : a) sa += x < 0 ? -x : x;
      for (i64 x : b) sb += x < 0 ? -x : x;
      return sa < sb;
    });
  }

  void build_tuples(const IntVec& vals, IntVec& cur, int i) {
    if (i == k) {
      tuples.push_back(cur);
      return;
    }
    for (i64 v : vals) {
      cur[static_cast<std::size_t>(i)] = v;
      build_tuples(vals, cur, i + 1);
    }
  }

  bool root_ok(const IntVec& s) const {
    for (const auto& h : witnesses)
      if (is_unit_pairing(dot(h, s), p)) return true;
    return false;
  }

  bool check_closing(int c) const {
    for (const IntVec* s : closing[static_cast<std::size_t>(c)])
      if (!root_ok(*s)) return false;
    return true;
  }

  void assign(int c, const IntVec& t) {
    for (int w = 0; w < k; ++w) witnesses[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)] = t[static_cast<std::size_t>(w)];
  }

  bool run(int c) {
    const int d = rs.embed_dim;
    if (c == d) return true;
    if (zero_sum && c == d - 1) {
      IntVec forced(static_cast<std::size_t>(k), 0);
      for (int w = 0; w < k; ++w)
        for (int j = 0; j < d - 1; ++j) forced[static_cast<std::size_t>(w)] -= witnesses[static_cast<std::size_t>(w)][static_cast<std::size_t>(j)];
      assign(c, forced);
      if (++nodes > node_cap) {
        capped = true;
        return false;
      }
      return check_closing(c);
    }
    for (const auto& t : tuples) {
      if (++nodes > node_cap) {
        capped = true;
        return false;
      }
      assign(c, t);
      if (check_closing(c) && run(c + 1)) return true;
      if (capped) return false;
    }
    assign(c, IntVec(static_cast<std::size_t>(k), 0));
    return false;
  }
};

}  // namespace

void recompute_pairings(CoveringCertificate& cert) {
  for (auto& c : cert.classes) {
    std::set<i64> vals;
    for (const auto& s : c.roots) vals.insert(dot(c.witness, s));
    c.pairings.assign(vals.begin(), vals.end());
  }
}

std::optional<CoveringCertificate> recipe_certificate(const RootSystem& rs, u64 p) {
  const int d = rs.embed_dim;
  std::vector<IntVec> witnesses;
  switch (rs.type) {
    case RootType::A:
      return std::nullopt;
    case RootType::G:
      // the functional taking the value 1 on both simple roots (root height)
      witnesses.push_back({0, -1, 2});
      break;
    case RootType::B:
    case RootType::C:
    case RootType::D:
      witnesses.push_back(IntVec(static_cast<std::size_t>(d), 1));
      witnesses.push_back(symmetric_sequence(d, d % 2 == 0));
      break;
    case RootType::F:
      witnesses.push_back(IntVec(4, 1));
      witnesses.push_back({0, 1, 2, -2});
      break;
    case RootType::E:
      witnesses.push_back(IntVec(8, 1));
      witnesses.push_back({0, 1, 2, -2, 3, -3, 4, -4});
      break;
  }
  CoveringCertificate cert;
  cert.type = rs.type;
  cert.rank = rs.rank;
  cert.p = p;
  cert.method = "recipe";
  if (witnesses.size() == 1) {
    cert.classes.push_back(CoverClass{witnesses[0], rs.roots, {}});
  } else {
    // class 1: roots with nonzero pairing against the all-ones vector
    // (the "unbalanced" roots); class 2: the rest.
    CoverClass c1{witnesses[0], {}, {}}, c2{witnesses[1], {}, {}};
    for (const auto& s : rs.roots) (dot(witnesses[0], s) != 0 ? c1 : c2).roots.push_back(s);
    if (!c1.roots.empty()) cert.classes.push_back(std::move(c1));
    if (!c2.roots.empty()) cert.classes.push_back(std::move(c2));
  }
  recompute_pairings(cert);
  return cert;
}

bool verify_certificate(const RootSystem& rs, const CoveringCertificate& cert, u64 p) {
  if (cert.type != rs.type || cert.rank != rs.rank) return false;
  if (p < 2) return false;
  std::multiset<IntVec> seen;
  for (const auto& c : cert.classes) {
    if (static_cast<int>(c.witness.size()) != rs.embed_dim) return false;
    if (rs.type == RootType::A) {
      i64 sum = 0;
      for (i64 x : c.witness) sum += x;
      if (sum != 0) return false;
    }
    std::set<i64> vals;
    for (const auto& s : c.roots) {
      if (!rs.contains(s)) return false;
      const i64 v = dot(c.witness, s);
      if (v % static_cast<i64>(p) == 0) return false;
      vals.insert(v);
      seen.insert(s);
    }
    if (!c.pairings.empty() && std::vector<i64>(vals.begin(), vals.end()) != c.pairings) return false;
  }
  if (seen.size() != rs.roots.size()) return false;
  for (const auto& s : rs.roots)
    if (seen.count(s) != 1) return false;
  return true;
}

CoveringCertificate certify_cover(const RootSystem& rs, u64 p, const CoverOptions& opts) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::BadParams, "certify_cover needs an odd prime");
  const int kmax = opts.max_classes > 0 ? opts.max_classes : nominal_classes(rs.type);

  if (auto recipe = recipe_certificate(rs, p)) {
    if (recipe->k() <= kmax && verify_certificate(rs, *recipe, p)) return *recipe;
    const auto allowed = recipe_class1_values(rs.type);
    if (!allowed.empty() && kmax >= 2) {
      RecipeSearch search(rs, p, allowed, opts.search_node_cap);
      if (search.run(0)) {
        // class 1 takes exactly the roots with an allowed h1 pairing
        CoveringCertificate cert;
        cert.type = rs.type;
        cert.rank = rs.rank;
        cert.p = p;
        cert.method = "recipe-search";
        CoverClass c1{search.h1, {}, {}}, c2{search.h2, {}, {}};
        for (const auto& s : rs.roots) {
          const i64 a = dot(search.h1, s);
          const bool in1 = std::find(allowed.begin(), allowed.end(), a) != allowed.end();
          (in1 ? c1 : c2).roots.push_back(s);
        }
        if (!c1.roots.empty()) cert.classes.push_back(std::move(c1));
        if (!c2.roots.empty()) cert.classes.push_back(std::move(c2));
        recompute_pairings(cert);
        if (verify_certificate(rs, cert, p)) return cert;
      }
    }
  }

  bool inconclusive = false;
  for (int k = 1; k <= kmax; ++k) {
    CoverSearch search(rs, p, k, opts.search_node_cap);
    if (search.run(0)) {
      if (auto cert = partition_by_witnesses(rs, p, search.witnesses)) {
        cert->method = "search";
        if (verify_certificate(rs, *cert, p)) return *cert;
      }
    }
    inconclusive = inconclusive || search.capped;
  }

  if (inconclusive) {
    Rng rng(opts.seed);
    const i64 half = static_cast<i64>((p - 1) / 2);
    const auto d = static_cast<std::size_t>(rs.embed_dim);
    for (u64 attempt = 0; attempt < opts.random_attempts; ++attempt) {
      std::vector<IntVec> ws(static_cast<std::size_t>(kmax), IntVec(d));
      for (auto& w : ws) {
        i64 sum = 0;
        for (std::size_t c = 0; c < d; ++c) {
          w[c] = rng.between(-half, half);
          sum += w[c];
        }
        if (rs.type == RootType::A) w[d - 1] -= sum;
      }
      if (auto cert = partition_by_witnesses(rs, p, ws)) {
        cert->method = "random";
        if (verify_certificate(rs, *cert, p)) return *cert;
      }
    }
  }
  throw Error(ErrorCode::CoveringUnavailable,
              rs.label() + " has no " + std::to_string(kmax) + "-class cover mod " + std::to_string(p) + " within the search bound");
}

void write_certificate(std::ostream& os, const CoveringCertificate& cert) {
  os << "certificate type=" << to_char(cert.type) << " rank=" << cert.rank << " p=" << cert.p << " k=" << cert.k()
     << " r=" << cert.r() << " method=" << (cert.method.empty() ? "unknown" : cert.method) << "\n";
  for (std::size_t t = 0; t < cert.classes.size(); ++t) {
    const auto& c = cert.classes[t];
    os << "class " << t + 1 << " size=" << c.roots.size() << "\n";
    os << "witness";
    for (i64 x : c.witness) os << ' ' << x;
    os << "\npairings";
    for (i64 x : c.pairings) os << ' ' << x;
    os << "\n";
    for (const auto& s : c.roots) {
      os << "root";
      for (i64 x : s) os << ' ' << x;
      os << "\n";
    }
  }
  os << "end\n";
}

namespace {

std::map<std::string, std::string> parse_kv(std::istringstream& ls) {
  std::map<std::string, std::string> kv;
  std::string tok;
  while (ls >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value, got '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

IntVec parse_ints(std::istringstream& ls) {
  IntVec v;
  i64 x;
  while (ls >> x) v.push_back(x);
  if (!ls.eof()) throw Error(ErrorCode::ParseError, "bad integer list");
  return v;
}

}  // namespace

std::vector<CoveringCertificate> read_certificates(std::istream& is) {
  std::vector<CoveringCertificate> out;
  std::optional<CoveringCertificate> cur;
  std::string line;
  int lineno = 0;
  try {
    while (std::getline(is, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::string head;
      if (!(ls >> head) || head[0] == '#') continue;
      if (head == "certificate") {
        if (cur) throw Error(ErrorCode::ParseError, "nested certificate");
        auto kv = parse_kv(ls);
        cur.emplace();
        cur->type = parse_root_type(kv.at("type"));
        cur->rank = std::stoi(kv.at("rank"));
        cur->p = std::stoull(kv.at("p"));
        cur->method = kv.count("method") ? kv.at("method") : "";
      } else if (!cur) {
        throw Error(ErrorCode::ParseError, "record outside certificate");
      } else if (head == "class") {
        cur->classes.emplace_back();
      } else if (head == "witness") {
        if (cur->classes.empty()) throw Error(ErrorCode::ParseError, "witness before class");
        cur->classes.back().witness = parse_ints(ls);
      } else if (head == "pairings") {
        if (cur->classes.empty()) throw Error(ErrorCode::ParseError, "pairings before class");
        cur->classes.back().pairings = parse_ints(ls);
      } else if (head == "root") {
        if (cur->classes.empty()) throw Error(ErrorCode::ParseError, "root before class");
        cur->classes.back().roots.push_back(parse_ints(ls));
      } else if (head == "end") {
        out.push_back(std::move(*cur));
        cur.reset();
      } else {
        throw Error(ErrorCode::ParseError, "unknown record '" + head + "'");
      }
    }
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::ParseError, "missing field at line " + std::to_string(lineno));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad number at line " + std::to_string(lineno));
  }
  if (cur) throw Error(ErrorCode::ParseError, "unterminated certificate");
  return out;
}

CertificateStore::CertificateStore(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (in) certs_ = read_certificates(in);
}

std::optional<CoveringCertificate> CertificateStore::find(RootType type, int rank, u64 p) const {
  for (const auto& c : certs_)
    if (c.type == type && c.rank == rank && c.p == p) return c;
  return std::nullopt;
}

CoveringCertificate CertificateStore::certify(const RootSystem& rs, u64 p, const CoverOptions& opts) {
  if (auto cached = find(rs.type, rs.rank, p); cached && verify_certificate(rs, *cached, p)) return *cached;
  auto cert = certify_cover(rs, p, opts);
  std::erase_if(certs_, [&](const CoveringCertificate& c) { return c.type == rs.type && c.rank == rs.rank && c.p == p; });
  certs_.push_back(cert);
  save();
  return cert;
}

void CertificateStore::save() const {
  std::ofstream out(path_);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path_);
  for (const auto& c : certs_) write_certificate(out, c);
}

}  // namespace chevsk
