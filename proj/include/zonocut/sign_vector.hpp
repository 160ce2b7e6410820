#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zono {

// Element of {+,0,-}^m. Entries are stored as -1/0/+1; the text form is a
// string over "+0-".
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(size_t m) : s_(m, 0) {}
  explicit SignVector(std::vector<int8_t> s) : s_(std::move(s)) {}

  static SignVector parse(std::string_view text);

  size_t size() const { return s_.size(); }
  int at(size_t i) const { return s_[i]; }
  void set(size_t i, int v) { s_[i] = static_cast<int8_t>(v); }

  SignVector negated() const;
  std::vector<int> zero_positions() const;
  size_t zero_count() const;
  bool zero_free() const { return zero_count() == 0; }
  bool all_zero() const { return zero_count() == size(); }

  // True if this vector agrees with `coarser` on every nonzero entry of
  // `coarser`, i.e. it can be obtained from `coarser` by replacing zeros.
  bool extends(const SignVector& coarser) const;

  int sum() const;  // counting + as 1 and - as -1

  std::string str() const;

  friend bool operator==(const SignVector& a, const SignVector& b) { return a.s_ == b.s_; }
  friend bool operator<(const SignVector& a, const SignVector& b) { return a.s_ < b.s_; }

 private:
  std::vector<int8_t> s_;
};

}  // namespace zono
