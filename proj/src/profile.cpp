#include "guilbaud/profile.hpp"

namespace guilbaud {

char to_char(Candidate x) noexcept { return static_cast<char>('a' + static_cast<int>(x)); }

Candidate candidate_from_char(char ch) {
  switch (ch) {
    case 'a': return Candidate::a;
    case 'b': return Candidate::b;
    case 'c': return Candidate::c;
    default: throw std::invalid_argument(std::string("unknown candidate '") + ch + "'");
  }
}

std::string to_string(const LinearOrder& order) {
  return {to_char(order.at(0)), '>', to_char(order.at(1)), '>', to_char(order.at(2))};
}

}  // namespace guilbaud
