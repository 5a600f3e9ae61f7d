#include "covlat/sets.hpp"

namespace covlat {

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_element(m, [&](int e) { out.push_back(e); });
  return out;
}

bool set_lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    int ea = std::countr_zero(a);
    int eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;  // proper prefix is smaller
}

}  // namespace covlat
