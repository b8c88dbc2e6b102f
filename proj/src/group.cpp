#include "holkit/group.hpp"

namespace holkit {

std::string group_key(const Word& a) {
  std::string key;
  key.reserve(a.length() * 3 + 2);
  for (Letter l : a.letters()) {
    key += std::to_string(l);
    key += '.';
  }
  return key;
}

std::string group_key(const Automorphism& a) {
  std::string key;
  for (int g = 0; g < a.rank(); ++g) {
    key += group_key(a.image(g));
    key += ';';
  }
  return key;
}

std::string group_key(const IntMatrix& a) { return a.str(); }

}  // namespace holkit
