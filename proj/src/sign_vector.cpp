#include "zonocut/sign_vector.hpp"

#include <stdexcept>

namespace zono {

SignVector SignVector::parse(std::string_view text) {
  std::vector<int8_t> s;
  s.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+': s.push_back(1); break;
      case '0': s.push_back(0); break;
      case '-': s.push_back(-1); break;
      default: throw std::invalid_argument(std::string("SignVector: bad character '") + c + "'");
    }
  }
  return SignVector(std::move(s));
}

SignVector SignVector::negated() const {
  std::vector<int8_t> t(s_.size());
  for (size_t i = 0; i < s_.size(); ++i) t[i] = static_cast<int8_t>(-s_[i]);
  return SignVector(std::move(t));
}

std::vector<int> SignVector::zero_positions() const {
  std::vector<int> z;
  for (size_t i = 0; i < s_.size(); ++i)
    if (s_[i] == 0) z.push_back(static_cast<int>(i));
  return z;
}

size_t SignVector::zero_count() const {
  size_t n = 0;
  for (int8_t v : s_) n += (v == 0);
  return n;
}

bool SignVector::extends(const SignVector& coarser) const {
  if (size() != coarser.size()) return false;
  for (size_t i = 0; i < s_.size(); ++i)
    if (coarser.s_[i] != 0 && s_[i] != coarser.s_[i]) return false;
  return true;
}

int SignVector::sum() const {
  int t = 0;
  for (int8_t v : s_) t += v;
  return t;
}

std::string SignVector::str() const {
  std::string out;
  out.reserve(s_.size());
  for (int8_t v : s_) out.push_back(v > 0 ? '+' : (v < 0 ? '-' : '0'));
  return out;
}

}  // namespace zono
