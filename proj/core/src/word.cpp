#include "tbchar/word.hpp"

namespace tbchar {

Word inverse(const Word& w) {
  Word out;
  for (std::size_t i = w.size(); i-- > 0;)
    out.append({w[i].gen, -w[i].exponent});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  for (const Letter& l : b) out.append(l);
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += l.gen == Gen::x ? "X" : "Xp";
    if (l.exponent == -1) out += "^-1";
  }
  return out;
}

}  // namespace tbchar
