#include "chevsk/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace chevsk {

namespace {

template <class T>
T read_value(std::istream& is, const char* what) {
  T v{};
  if (!(is >> v)) throw Error(ErrorCode::ParseError, std::string("expected ") + what);
  return v;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return in;
}

}  // namespace

ModMatrix read_matrix(std::istream& is) {
  const auto p = read_value<u64>(is, "p");
  const auto N = read_value<int>(is, "N");
  const auto dim = read_value<int>(is, "dim");
  if (dim < 1 || dim > 8) throw Error(ErrorCode::ParseError, "dimension out of range");
  const RingParams params = RingParams::make(p, N);
  ModMatrix m(params, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.set_signed(i, j, read_value<i64>(is, "matrix entry"));
  return m;
}

void write_matrix(std::ostream& os, const ModMatrix& m) {
  os << m.params().p << ' ' << m.params().N << ' ' << m.dim() << '\n';
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
}

GroupElement read_element(std::istream& is) { return GroupElement(read_matrix(is)); }

GenSet read_generators(std::istream& is) {
  const auto count = read_value<int>(is, "generator count");
  if (count < 1) throw Error(ErrorCode::ParseError, "generator count must be >= 1");
  std::vector<GroupElement> gens;
  for (int k = 0; k < count; ++k) gens.push_back(read_element(is));
  return GenSet::make(std::move(gens));
}

void write_generators(std::ostream& os, const GenSet& s) {
  os << s.size() << '\n';
  for (const auto& g : s.gens) write_matrix(os, g.mat());
}

GroupElement read_element_file(const std::string& path) {
  auto in = open_file(path);
  return read_element(in);
}

GenSet read_generators_file(const std::string& path) {
  auto in = open_file(path);
  return read_generators(in);
}

}  // namespace chevsk
