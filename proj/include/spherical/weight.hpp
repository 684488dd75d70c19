#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace spherical {

// An integer vector in the coweight lattice of G (equivalently the weight
// lattice of the dual group). Also used for integer linear forms.
class Weight {
 public:
  using value_type = std::int64_t;

  Weight() = default;
  explicit Weight(std::size_t m) : c_(m, 0) {}
  Weight(std::initializer_list<value_type> init) : c_(init) {}
  explicit Weight(std::vector<value_type> v) : c_(std::move(v)) {}

  std::size_t size() const { return c_.size(); }
  value_type& operator[](std::size_t i) { return c_[i]; }
  value_type operator[](std::size_t i) const { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<value_type>& coords() const { return c_; }

  bool is_zero() const;
  value_type dot(const Weight& other) const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(value_type k);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, value_type k) { return a *= k; }
  friend Weight operator*(value_type k, Weight a) { return a *= k; }
  Weight operator-() const { return Weight(*this) *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.c_ <=> b.c_; }

  // "(1,0,-1)"
  std::string str() const;

 private:
  std::vector<value_type> c_;
};

// Square integer matrix acting on weights from the left.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  std::int64_t& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Weight apply(const Weight& w) const;
  // Action on linear forms: (f . M)(x) = f(Mx).
  Weight pull_back(const Weight& form) const;
  IntMatrix operator*(const IntMatrix& o) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

Weight parse_weight(const std::string& text);  // "1,0,-1" or "(1,0,-1)"

}  // namespace spherical
