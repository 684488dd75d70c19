#include "spherical/weight.hpp"

#include "spherical/numbers.hpp"

#include <cassert>
#include <sstream>

namespace spherical {

bool Weight::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

Weight::value_type Weight::dot(const Weight& other) const {
  assert(other.size() == size());
  value_type s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i] * other.c_[i];
  return s;
}

Weight& Weight::operator+=(const Weight& o) {
  assert(o.size() == size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  assert(o.size() == size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(value_type k) {
  for (auto& x : c_) x *= k;
  return *this;
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Weight IntMatrix::apply(const Weight& w) const {
  assert(w.size() == n_);
  Weight out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += at(i, j) * w[j];
    out[i] = s;
  }
  return out;
}

Weight IntMatrix::pull_back(const Weight& form) const {
  assert(form.size() == n_);
  Weight out(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += form[i] * at(i, j);
    out[j] = s;
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  assert(o.n_ == n_);
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      auto a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

Weight parse_weight(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && ch != ' ') s += ch;
  std::vector<Weight::value_type> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long long x = std::stoll(item, &pos);
      if (pos != item.size()) throw InvalidInput("bad weight entry: " + item);
      v.push_back(x);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad weight: " + text);
    }
  }
  if (v.empty()) throw InvalidInput("empty weight: " + text);
  return Weight(std::move(v));
}

}  // namespace spherical
