#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tbchar/errors.hpp"

namespace tbchar {

// The two meridian generators of the link group, printed as X and Xp.
enum class Gen : std::uint8_t { x = 0, xp = 1 };

struct Letter {
  Gen gen;
  int exponent;  // +1 or -1; higher powers are spelled out by repetition
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Word in the free group on x, xp.  Stored as written; no free reduction
// (the trace engine handles unreduced words).
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) {
    for (const Letter& l : letters) append(l);
  }
  explicit Word(const std::vector<Letter>& letters) {
    for (const Letter& l : letters) append(l);
  }
  static Word letter(Gen g, int exponent = 1) { return Word{{g, exponent}}; }

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word& append(Letter l) {
    if (l.exponent != 1 && l.exponent != -1)
      throw Error("letter exponent must be +1 or -1");
    letters_.push_back(l);
    return *this;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Reverse with flipped exponents.
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
// "Xp X^-1 Xp" style; the empty word prints as "1".
std::string to_string(const Word& w);

}  // namespace tbchar
