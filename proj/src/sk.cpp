#include "chevsk/sk.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace chevsk {

u64 gens_hash(const GenSet& s) {
  std::ostringstream os;
  os << s.params.p << ' ' << s.dim;
  const u64 q = s.params.p * s.params.p;
  for (const auto& g : s.gens)
    for (u64 v : g.mat().entries()) os << ' ' << v % q;
  u64 h = 14695981039346656037ULL;
  for (unsigned char c : os.str()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void BaseTable::add(u64 key, Word w) {
  index_.insert(key, static_cast<std::uint32_t>(keys_.size()));
  keys_.push_back(key);
  max_length_ = std::max(max_length_, w.length());
  words_.push_back(std::move(w));
}

BaseTable BaseTable::build(const GenSet& s, const BfsOptions& opts) {
  if (s.params.N < 2) throw Error(ErrorCode::BadPrecision, "base table needs precision >= 2");
  BaseTable t(s.projected(2), chevsk::gens_hash(s));
  const BfsResult bfs = bfs_parallel(t.gens2_, opts);
  if (!bfs.complete)
    throw Error(ErrorCode::NotGenerating, "S generates " + std::to_string(bfs.size()) + " of " + std::to_string(bfs.group_order) + " elements of G_2");
  t.index_ = FlatIndex(bfs.size());
  for (std::size_t pos = 0; pos < bfs.size(); ++pos) {
    std::vector<int> letters;
    if (pos != 0) {
      letters.push_back(letter_of_rank(bfs.rank[pos]));
      const auto& tail = t.words_[bfs.parent[pos]].letters();
      letters.insert(letters.end(), tail.begin(), tail.end());
    }
    t.add(bfs.keys[pos], Word::reduce(letters));
  }
  return t;
}

BaseTable BaseTable::read(std::istream& is, const GenSet& s) {
  if (s.params.N < 2) throw Error(ErrorCode::BadPrecision, "base table needs precision >= 2");
  u64 p = 0, hash = 0;
  std::string line;
  if (!std::getline(is, line) || !(std::istringstream(line) >> p >> hash)) throw Error(ErrorCode::ParseError, "bad base table header");
  if (p != s.params.p || hash != chevsk::gens_hash(s)) throw Error(ErrorCode::ParseError, "base table was built for another generating set");
  BaseTable t(s.projected(2), hash);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    const u64 key = t.codec_.parse_key_text(line.substr(0, sp));
    Word w = Word::parse(sp == std::string::npos ? "" : line.substr(sp + 1));
    w.set_unreduced_length(w.length());
    if (t.codec_.encode(evaluate(w, t.gens2_).mat()) != key) throw Error(ErrorCode::ParseError, "word does not evaluate to its key: " + line);
    if (t.index_.find(key)) throw Error(ErrorCode::ParseError, "duplicate key " + line.substr(0, sp));
    t.add(key, std::move(w));
  }
  if (mpz_class(static_cast<unsigned long>(t.size())) != sl_order(p, 2, s.dim))
    throw Error(ErrorCode::NotGenerating, "base table does not cover G_2");
  return t;
}

const Word& BaseTable::lookup(const GroupElement& g) const {
  auto pos = index_.find(codec_.encode(project(g, 2).mat()));
  if (!pos) throw Error(ErrorCode::InvalidElement, "element missing from base table");
  return words_[*pos];
}

const Word& BaseTable::lookup_mod_p(const GroupElement& g) const {
  const ModMatrix target = g.mat().reduced(1);
  // words_ are in BFS order, so the first hit is a shortest one
  for (std::size_t pos = 0; pos < keys_.size(); ++pos)
    if (codec_.decode(keys_[pos]).reduced(1) == target) return words_[pos];
  throw Error(ErrorCode::InvalidElement, "element missing from base table");
}

void BaseTable::write(std::ostream& os) const {
  os << gens2_.params.p << ' ' << hash_ << '\n';
  for (std::size_t pos = 0; pos < keys_.size(); ++pos) {
    os << codec_.key_text(keys_[pos]);
    if (!words_[pos].empty()) os << ' ' << words_[pos].to_string();
    os << '\n';
  }
}

std::vector<CommPair> sk_prime(const GroupElement& g, int n, const CoveringCertificate& cert) {
  if (n < 2) throw Error(ErrorCode::BadParams, "sk_prime needs n >= 2");
  const int lv = level(g);
  if (lv < n) throw Error(ErrorCode::LevelTooLow, "level " + std::to_string(lv) + " < " + std::to_string(n));
  if (n >= g.precision()) return {};
  const GroupElement gq = project(g, n + 1);
  if (gq.is_identity()) return {};
  const RingParams& params = gq.params();

  // only A mod p matters: g = I + p^n A mod p^{n+1}
  ModMatrix a = nlog(gq, n).mat();
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) a.set(r, c, a(r, c) % params.p);
  const int last = a.dim() - 1;
  a.set(last, last, mod_sub(a(last, last), a.trace(), params.modulus));

  const int i = (n + 1) / 2, j = n / 2;
  std::vector<CommPair> out;
  for (const auto& bp : decompose_brackets(LieElement(std::move(a)), cert))
    out.push_back({exp_trunc(bp.left, i), exp_trunc(bp.right, j)});
  return out;
}

SolovayKitaev::SolovayKitaev(GenSet s, CoveringCertificate cert, BaseTable table)
    : s_(std::move(s)), cert_(std::move(cert)), table_(std::move(table)) {
  if (cert_.type != RootType::A || cert_.rank != s_.dim - 1 || cert_.p != s_.params.p ||
      !verify_certificate(RootSystem::build(RootType::A, cert_.rank), cert_, s_.params.p))
    throw Error(ErrorCode::CertificateMismatch, "certificate does not fit the generating set");
  if (table_.gens_hash() != gens_hash(s_)) throw Error(ErrorCode::BadParams, "base table built for another generating set");
}

SolovayKitaev SolovayKitaev::build(const GenSet& s, const CoverOptions& cover, const BfsOptions& bfs) {
  const RootSystem rs = RootSystem::build(RootType::A, s.dim - 1);
  CoveringCertificate cert = certify_cover(rs, s.params.p, cover);
  BaseTable table = BaseTable::build(s, bfs);
  return SolovayKitaev(s, std::move(cert), std::move(table));
}

Word SolovayKitaev::layer_word(const GroupElement& x, int m, SKStats* stats) const {
  if (m < 1) throw Error(ErrorCode::BadParams, "layer_word needs m >= 1");
  const int lv = level(x);
  if (lv < m) throw Error(ErrorCode::LevelTooLow, "level " + std::to_string(lv) + " < " + std::to_string(m));
  if (stats) {
    ++stats->layer_word_calls;
    if (stats->level_max.size() <= static_cast<std::size_t>(m)) stats->level_max.resize(static_cast<std::size_t>(m) + 1, 0);
  }
  const GroupElement xq = project(x, std::min(m + 1, x.precision()));
  Word w;
  if (xq.is_identity()) return w;
  if (m <= 1) {
    w = table_.lookup(xq);
  } else {
    if (stats) ++stats->sk_prime_calls;
    u64 child_max = 0;
    for (const auto& [xk, yk] : sk_prime(xq, m, cert_)) {
      const Word u = layer_word(xk, (m + 1) / 2, stats);
      const Word v = layer_word(yk, m / 2, stats);
      child_max = std::max({child_max, u.unreduced_length(), v.unreduced_length()});
      w = concat(w, comm_word(u, v));
    }
    if (stats && w.unreduced_length() > 4 * static_cast<u64>(r()) * child_max) ++stats->recursion_violations;
  }
  if (stats) stats->level_max[static_cast<std::size_t>(m)] = std::max(stats->level_max[static_cast<std::size_t>(m)], w.unreduced_length());
  return w;
}

Word SolovayKitaev::approx(const GroupElement& g, int n, SKStats* stats) const {
  if (n < 1 || n > s_.params.N || n > g.precision()) throw Error(ErrorCode::BadPrecision, "n outside [1, N]");
  SKStats local;
  SKStats& st = stats ? *stats : local;
  st = SKStats{};
  st.n = n;
  st.r = r();
  st.C2 = table_.max_length();
  st.bound = diam_bound(n, 2, st.r, static_cast<double>(st.C2));
  st.layer_lengths.assign(static_cast<std::size_t>(n), 0);

  Word w;
  if (n == 1) {
    w = table_.lookup_mod_p(g);
    st.base_length = w.unreduced_length();
  } else {
    const GroupElement gn = project(g, n);
    const GenSet sn = s_.projected(n);
    w = table_.lookup(gn);
    st.base_length = w.unreduced_length();
    GroupElement e = evaluate(w, sn);
    for (int j = 2; j < n; ++j) {
      const GroupElement eps = e.inverse() * gn;
      const Word c = layer_word(eps, j, &st);
      st.layer_lengths[static_cast<std::size_t>(j)] = c.unreduced_length();
      w = concat(w, c);
      e = e * evaluate(c, sn);
    }
  }
  st.total_reduced = w.length();
  st.total_unreduced = w.unreduced_length();
  return w;
}

Word SolovayKitaev::approx_literal(const GroupElement& g, int n) const {
  if (n > 5) throw Error(ErrorCode::BadParams, "literal recursion is limited to n <= 5");
  if (n <= 2) return approx(g, n);
  const Word w0 = approx_literal(g, n - 1);
  const GenSet sn = s_.projected(n);
  const GroupElement gn = project(g, n);
  const GroupElement z = evaluate(w0, sn).inverse() * gn;
  Word w = w0;
  for (const auto& [xk, yk] : sk_prime(z, n - 1, cert_))
    w = concat(w, comm_word(approx_literal(xk, n - 1), approx_literal(yk, n - 1)));
  return w;
}

double d_exponent(double i, int r) {
  if (i < 2 || r < 1) throw Error(ErrorCode::BadParams, "d_exponent needs i >= 2, r >= 1");
  return std::log(4.0 * r) / (std::log(2.0 * i) - std::log(i + 1.0));
}

double diam_bound(double n, double i, int r, double C) { return C * std::pow(n, 1.0 + d_exponent(i, r)); }

mpz_class default_C_bound(u64 p, int i, RootType type, int rank) {
  if (i < 0) throw Error(ErrorCode::BadParams, "i must be >= 0");
  const std::size_t k = RootSystem::build(type, rank).roots.size() + static_cast<std::size_t>(rank);
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(i) * k);
  return out;
}

}  // namespace chevsk
