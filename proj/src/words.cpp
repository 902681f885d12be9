#include "chevsk/words.hpp"

#include <sstream>

namespace chevsk {

Word Word::reduce(const std::vector<int>& raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (int a : raw) {
    if (a == 0) throw Error(ErrorCode::ZeroLetter, "letter 0 in word");
    if (!w.letters_.empty() && w.letters_.back() == -a)
      w.letters_.pop_back();
    else
      w.letters_.push_back(a);
  }
  w.unreduced_ = raw.size();
  return w;
}

Word Word::letter(int a) { return reduce({a}); }

std::string Word::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i];
  return os.str();
}

Word Word::parse(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> raw;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int a = 0;
    try {
      a = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error(ErrorCode::ParseError, "bad letter '" + tok + "'");
    raw.push_back(a);
  }
  return reduce(raw);
}

Word concat(const Word& u, const Word& v) {
  std::vector<int> raw = u.letters();
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  Word w = Word::reduce(raw);
  w.set_unreduced_length(u.unreduced_length() + v.unreduced_length());
  return w;
}

Word invert(const Word& w) {
  std::vector<int> raw(w.letters().rbegin(), w.letters().rend());
  for (int& a : raw) a = -a;
  Word r = Word::reduce(raw);
  r.set_unreduced_length(w.unreduced_length());
  return r;
}

Word comm_word(const Word& u, const Word& v) {
  Word w = concat(concat(invert(u), invert(v)), concat(u, v));
  w.set_unreduced_length(2 * (u.unreduced_length() + v.unreduced_length()));
  return w;
}

GroupElement evaluate(const Word& w, const GenSet& s) {
  std::vector<GroupElement> letters;
  letters.reserve(2 * s.size());
  for (std::size_t i = 1; i <= s.size(); ++i) {
    letters.push_back(s.letter(static_cast<int>(i)));
    letters.push_back(s.letter(-static_cast<int>(i)));
  }
  GroupElement acc = GroupElement::identity(s.params, s.dim);
  for (int a : w.letters()) {
    const auto idx = static_cast<std::size_t>(a < 0 ? -a : a);
    if (idx > s.size())
      throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(a) + " with " + std::to_string(s.size()) + " generators");
    acc = acc * letters[2 * (idx - 1) + (a < 0 ? 1 : 0)];
  }
  return acc;
}

}  // namespace chevsk
