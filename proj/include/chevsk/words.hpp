#pragma once

// Freely reduced words over signed generator indices.

#include <string>
#include <vector>

#include "chevsk/group.hpp"

namespace chevsk {

class Word {
 public:
  Word() = default;

  // Freely reduces; throws ZeroLetter on a 0 entry.
  static Word reduce(const std::vector<int>& raw);
  static Word letter(int a);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  // Length before any cancellation, summed through concat/comm_word.
  u64 unreduced_length() const { return unreduced_; }
  void set_unreduced_length(u64 n) { unreduced_ = n; }

  bool operator==(const Word& o) const { return letters_ == o.letters_; }

  std::string to_string() const;
  static Word parse(const std::string& text);

 private:
  std::vector<int> letters_;
  u64 unreduced_ = 0;
};

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
// u^-1 v^-1 u v
Word comm_word(const Word& u, const Word& v);

// s_{a1} s_{a2} ... s_{ak} at the precision of S. Throws IndexOutOfRange.
GroupElement evaluate(const Word& w, const GenSet& s);

}  // namespace chevsk
