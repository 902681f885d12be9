// chevsk command-line driver. Every command prints key=value records, one per
// line, with the seed included and wall_ms last.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chevsk/diam.hpp"
#include "chevsk/expolog.hpp"
#include "chevsk/io.hpp"
#include "chevsk/sk.hpp"

using namespace chevsk;

namespace {

class Record {
 public:
  template <class T>
  Record& add(const std::string& key, const T& value) {
    std::ostringstream os;
    os << value;
    fields_.emplace_back(key, os.str());
    return *this;
  }
  Record& quoted(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, "\"" + value + "\"");
    return *this;
  }
  void print(std::chrono::steady_clock::time_point t0) const {
    for (const auto& [k, v] : fields_) std::cout << k << '=' << v << ' ';
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "wall_ms=" << ms << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

struct Args {
  u64 p = 5;
  int n = 4;
  int rank = 1;
  std::string type = "A";
  u64 seed = 1;
  std::string gens;
  std::string element;
  std::string suite;
  int i = 2;
  int r = 3;
  u64 cap = 100'000'000;
  u64 samples = 1000;
  int max_classes = 0;
  std::string certs;
  std::string table;
  std::string export_path;
};

int cmd_certify(const Args& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const RootSystem rs = RootSystem::build(parse_root_type(a.type), a.rank);
  CoverOptions opts;
  opts.seed = a.seed;
  opts.max_classes = a.max_classes;
  CoveringCertificate cert;
  if (a.certs.empty()) {
    cert = certify_cover(rs, a.p, opts);
  } else {
    CertificateStore store(a.certs);
    cert = store.certify(rs, a.p, opts);
  }
  Record rec;
  rec.add("command", "certify").add("type", a.type).add("rank", a.rank).add("p", a.p).add("seed", a.seed).add("rng", Rng::kName);
  rec.add("roots", rs.roots.size()).add("k", cert.k()).add("r", strong_perfectness_r(cert)).add("method", cert.method);
  for (std::size_t c = 0; c < cert.classes.size(); ++c) {
    rec.add("class" + std::to_string(c + 1) + "_size", cert.classes[c].roots.size());
    rec.add("class" + std::to_string(c + 1) + "_witness", join(cert.classes[c].witness));
    rec.add("class" + std::to_string(c + 1) + "_pairings", join(cert.classes[c].pairings));
  }
  rec.add("verified", verify_certificate(rs, cert, a.p) ? 1 : 0);
  rec.print(t0);
  return 0;
}

int cmd_sk(const Args& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const GenSet s = read_generators_file(a.gens);
  const GroupElement g = read_element_file(a.element);
  if (!(g.params() == s.params) || g.dim() != s.dim) throw Error(ErrorCode::DimensionMismatch, "element and generators differ in ring or dimension");
  CoverOptions cover;
  cover.seed = a.seed;
  cover.max_classes = a.max_classes;
  BfsOptions bfs;
  bfs.cap = a.cap;
  const RootSystem rs = RootSystem::build(RootType::A, s.dim - 1);
  CoveringCertificate cert = a.certs.empty() ? certify_cover(rs, s.params.p, cover) : CertificateStore(a.certs).certify(rs, s.params.p, cover);
  BaseTable table = [&] {
    if (!a.table.empty()) {
      std::ifstream in(a.table);
      if (in) return BaseTable::read(in, s);
    }
    BaseTable t = BaseTable::build(s, bfs);
    if (!a.table.empty()) {
      std::ofstream out(a.table);
      if (!out) throw Error(ErrorCode::IoError, "cannot write " + a.table);
      t.write(out);
    }
    return t;
  }();
  const SolovayKitaev sk(s, std::move(cert), std::move(table));
  SKStats st;
  const Word w = sk.approx(g, a.n, &st);
  const bool ok = project(evaluate(w, s), a.n) == project(g, a.n);
  Record rec;
  rec.add("command", "sk").add("p", s.params.p).add("N", s.params.N).add("dim", s.dim).add("n", a.n).add("seed", a.seed).add("rng", Rng::kName);
  rec.add("gens_hash", sk.table().gens_hash()).add("r", st.r).add("C2", st.C2);
  rec.add("length", st.total_reduced).add("unreduced", st.total_unreduced).add("base_length", st.base_length);
  rec.add("layer_lengths", join(st.layer_lengths)).add("level_max", join(st.level_max));
  rec.add("sk_prime_calls", st.sk_prime_calls).add("layer_word_calls", st.layer_word_calls);
  rec.add("bound", st.bound).add("within_bound", static_cast<double>(st.total_unreduced) <= st.bound ? 1 : 0);
  rec.add("verified", ok ? 1 : 0).quoted("word", w.to_string());
  rec.print(t0);
  return ok ? 0 : 1;
}

int cmd_diam(const Args& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const GenSet s = read_generators_file(a.gens);
  BfsOptions opts;
  opts.cap = a.cap;
  const DistanceTable t = bfs_distances(s, a.n, opts);
  if (!a.export_path.empty()) {
    std::ofstream out(a.export_path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + a.export_path);
    write_distances(out, t);
  }
  Record rec;
  rec.add("command", "diam").add("p", s.params.p).add("n", a.n).add("dim", s.dim).add("seed", a.seed).add("rng", Rng::kName);
  rec.add("closure", t.bfs.size()).add("order", t.bfs.group_order).add("generating", t.generating() ? 1 : 0);
  if (t.generating()) {
    rec.add("diameter", t.diameter());
    std::vector<std::uint32_t> layers;
    for (int j = 0; j < a.n; ++j) layers.push_back(chain_diameter(t, j, j + 1));
    rec.add("layer_diameters", join(layers));
  }
  rec.print(t0);
  if (!t.generating()) throw Error(ErrorCode::NotGenerating, "closure " + std::to_string(t.bfs.size()) + " < |G_n|");
  return 0;
}

int cmd_verify(const Args& a, bool p_given, bool n_given) {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(a.seed);
  u64 checks = 0, failures = 0;
  Record rec;
  rec.add("command", "verify").add("suite", a.suite);
  if (a.suite == "expolog") {
    const RingParams params = RingParams::make(a.p, a.n);
    for (int m = 1; m <= a.n; ++m) {
      const WeigelReport rep = verify_weigel(params, a.rank + 1, m, a.samples, rng);
      checks += rep.samples;
      failures += rep.failures();
    }
    rec.add("p", a.p).add("N", a.n).add("rank", a.rank);
  } else if (a.suite == "commutator") {
    if (a.n < 3) throw Error(ErrorCode::BadParams, "commutator suite needs n >= 3");
    const RingParams params = RingParams::make(a.p, a.n);
    for (u64 s = 0; s < a.samples; ++s) {
      const int i = 1 + static_cast<int>(rng.below(static_cast<u64>(a.n - 2)));
      const int j = 1 + static_cast<int>(rng.below(static_cast<u64>(a.n - 1 - i)));
      const LieElement x = LieElement::random(params, a.rank + 1, rng);
      const LieElement y = LieElement::random(params, a.rank + 1, rng);
      const GroupElement c = commutator(exp_trunc(x, i), exp_trunc(y, j));
      const ModMatrix expect = ModMatrix::identity(params, a.rank + 1) + bracket(x, y).mat().scaled(params.power(i + j));
      ++checks;
      if (!(c.mat().reduced(i + j + 1) == expect.reduced(i + j + 1))) ++failures;
    }
    rec.add("p", a.p).add("N", a.n).add("rank", a.rank);
  } else if (a.suite == "skprime") {
    if (a.n < 3) throw Error(ErrorCode::BadParams, "skprime suite needs n >= 3");
    const RingParams params = RingParams::make(a.p, a.n);
    const CoveringCertificate cert = certify_cover(RootSystem::build(RootType::A, a.rank), a.p);
    for (u64 s = 0; s < a.samples; ++s) {
      const int lv = 2 + static_cast<int>(rng.below(static_cast<u64>(a.n - 2)));
      const GroupElement g = random_in_gamma_direct(params, a.rank + 1, lv, rng);
      GroupElement prod = GroupElement::identity(params.with_precision(lv + 1), a.rank + 1);
      bool ok = true;
      for (const auto& [x, y] : sk_prime(g, lv, cert)) {
        ok = ok && level(x) >= (lv + 1) / 2 && level(y) >= lv / 2;
        prod = prod * commutator(x, y);
      }
      ++checks;
      if (!ok || !(prod == project(g, lv + 1))) ++failures;
    }
    rec.add("p", a.p).add("N", a.n).add("rank", a.rank);
  } else if (a.suite == "subadd") {
    const u64 p = p_given ? a.p : 3;
    const int n = n_given ? a.n : 3;
    const RingParams params = RingParams::make(p, n);
    BfsOptions opts;
    opts.cap = a.cap;
    const u64 sets = std::min<u64>(a.samples, 20);
    u64 rejected = 0;
    for (u64 done = 0; done < sets;) {
      const GenSet s = GenSet::make({random_element(params, a.rank + 1, rng), random_element(params, a.rank + 1, rng)});
      const DistanceTable t = bfs_distances(s, n, opts);
      if (!t.generating()) {
        ++rejected;
        continue;
      }
      for (int x = 0; x <= n; ++x)
        for (int y = x; y <= n; ++y)
          for (int z = y; z <= n; ++z) {
            ++checks;
            if (!check_subadditivity(t, x, y, z)) ++failures;
          }
      ++done;
    }
    rec.add("p", p).add("N", n).add("rank", a.rank).add("sets", sets).add("rejected", rejected);
  } else {
    throw Error(ErrorCode::BadParams, "unknown suite '" + a.suite + "'");
  }
  rec.add("seed", a.seed).add("rng", Rng::kName).add("checks", checks).add("failures", failures);
  rec.print(t0);
  return failures == 0 ? 0 : 1;
}

int cmd_bound(const Args& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const RootType type = parse_root_type(a.type);
  const mpz_class C = default_C_bound(a.p, a.i, type, a.rank);
  const double d = d_exponent(a.i, a.r);
  const double log10_bound = std::log10(C.get_d()) + (1.0 + d) * std::log10(static_cast<double>(a.n));
  Record rec;
  rec.add("command", "bound").add("i", a.i).add("r", a.r).add("n", a.n).add("p", a.p).add("type", a.type).add("rank", a.rank);
  rec.add("seed", a.seed).add("rng", Rng::kName).add("d", d).add("d_r3", d_exponent(a.i, 3)).add("d_r4", d_exponent(a.i, 4));
  rec.add("C", C.get_str()).add("log10_bound", log10_bound);
  rec.add("bound", std::pow(10.0, log10_bound));
  rec.print(t0);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solovay-Kitaev word synthesis and exact diameter tools for SL_{l+1}(Z/p^n Z)"};
  app.require_subcommand(1);
  Args a;
  std::cout.precision(10);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", a.seed, "RNG seed");
  };
  auto* certify = app.add_subcommand("certify", "Find and verify a covering certificate");
  certify->add_option("--type", a.type, "Root type A-G")->required();
  certify->add_option("--rank", a.rank, "Rank l")->required();
  certify->add_option("--p", a.p, "Odd prime")->required();
  certify->add_option("--max-classes", a.max_classes, "Class limit (0: nominal for the type)");
  certify->add_option("--certs", a.certs, "Certificate cache file");
  add_common(certify);

  auto* sk = app.add_subcommand("sk", "Synthesize a word for an element");
  sk->add_option("--gens", a.gens, "Generator file")->required()->check(CLI::ExistingFile);
  sk->add_option("--element", a.element, "Matrix file")->required()->check(CLI::ExistingFile);
  sk->add_option("--n", a.n, "Target precision")->required();
  sk->add_option("--cap", a.cap, "Largest group the BFS will enumerate");
  sk->add_option("--certs", a.certs, "Certificate cache file");
  sk->add_option("--table", a.table, "Base table file (read if present, written otherwise)");
  sk->add_option("--max-classes", a.max_classes, "Class limit for certification");
  add_common(sk);

  auto* diam = app.add_subcommand("diam", "Exact diameter by BFS");
  diam->add_option("--gens", a.gens, "Generator file")->required()->check(CLI::ExistingFile);
  diam->add_option("--n", a.n, "Precision")->required();
  diam->add_option("--cap", a.cap, "Largest group the BFS will enumerate");
  diam->add_option("--export", a.export_path, "Write 'key distance' lines here");
  add_common(diam);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", a.suite, "expolog | commutator | skprime | subadd")
      ->required()
      ->check(CLI::IsMember({"expolog", "commutator", "skprime", "subadd"}));
  auto* vp = verify->add_option("--p", a.p, "Odd prime");
  auto* vn = verify->add_option("--n", a.n, "Precision");
  verify->add_option("--rank", a.rank, "Rank l of SL_{l+1}");
  verify->add_option("--samples", a.samples, "Samples per check");
  verify->add_option("--cap", a.cap, "Largest group the BFS will enumerate");
  add_common(verify);

  auto* bound = app.add_subcommand("bound", "Evaluate d_i(r) and C n^{1+d}");
  bound->add_option("--i", a.i, "Base level i >= 2");
  bound->add_option("--r", a.r, "Commutators per layer");
  bound->add_option("--n", a.n, "Precision");
  bound->add_option("--p", a.p, "Prime");
  bound->add_option("--type", a.type, "Root type");
  bound->add_option("--rank", a.rank, "Rank");
  add_common(bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*certify) return cmd_certify(a);
    if (*sk) return cmd_sk(a);
    if (*diam) return cmd_diam(a);
    if (*verify) return cmd_verify(a, vp->count() > 0, vn->count() > 0);
    if (*bound) return cmd_bound(a);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_status(e.code());
  }
  return 0;
}
