#include "spherical/laurent.hpp"

#include <cmath>

namespace spherical {

namespace {

// Formats c * body, where body is "" for the constant monomial.
void append_term(std::string& out, const BigInt& c, const std::string& body) {
  BigInt mag = c < 0 ? BigInt(-c) : c;
  if (out.empty())
    out = c < 0 ? "-" : "";
  else
    out += c < 0 ? " - " : " + ";
  if (body.empty())
    out += mag.str();
  else if (mag == 1)
    out += body;
  else
    out += mag.str() + "*" + body;
}

std::string power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

QPoly QPoly::monomial(BigInt c, int exp) {
  QPoly p;
  p.add(exp, c);
  return p;
}

void QPoly::add(int exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt QPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt QPoly::at_one() const {
  BigInt s = 0;
  for (auto& [e, c] : terms_) s += c;
  return s;
}

QPoly QPoly::invert() const {
  QPoly p;
  for (auto& [e, c] : terms_) p.terms_[-e] = c;
  return p;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  QPoly out;
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) out.add(e1 + e2, c1 * c2);
  return *this = std::move(out);
}

QPoly QPoly::shifted(int exp) const {
  QPoly p;
  for (auto& [e, c] : terms_) p.terms_[e + exp] = c;
  return p;
}

std::string QPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [e, c] : terms_) append_term(out, c, power("q", e));
  return out;
}

LaurentCoeff LaurentCoeff::monomial(BigInt c, int v_exp, int x_exp) {
  LaurentCoeff p;
  p.add({v_exp, x_exp}, c);
  return p;
}

LaurentCoeff LaurentCoeff::from_q(const QPoly& p) {
  LaurentCoeff out;
  for (auto& [e, c] : p.terms()) out.terms_[{2 * e, 0}] = c;
  return out;
}

void LaurentCoeff::add(const Key& k, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentCoeff::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} && terms_.begin()->second == 1;
}

BigInt LaurentCoeff::coeff(int v_exp, int x_exp) const {
  auto it = terms_.find({v_exp, x_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool LaurentCoeff::is_x_free() const {
  for (auto& [k, c] : terms_)
    if (k.second != 0) return false;
  return true;
}

LaurentCoeff& LaurentCoeff::operator+=(const LaurentCoeff& o) {
  for (auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

LaurentCoeff& LaurentCoeff::operator-=(const LaurentCoeff& o) {
  for (auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

LaurentCoeff operator*(const LaurentCoeff& a, const LaurentCoeff& b) {
  LaurentCoeff out;
  for (auto& [k1, c1] : a.terms_)
    for (auto& [k2, c2] : b.terms_) out.add({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
  return out;
}

LaurentCoeff& LaurentCoeff::operator*=(const LaurentCoeff& o) { return *this = *this * o; }

LaurentCoeff& LaurentCoeff::operator*=(const BigInt& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= k;
  return *this;
}

LaurentCoeff LaurentCoeff::operator-() const {
  LaurentCoeff out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

LaurentCoeff LaurentCoeff::shifted(int dv, int dx) const {
  LaurentCoeff out;
  for (auto& [k, c] : terms_) out.terms_[{k.first + dv, k.second + dx}] = c;
  return out;
}

LaurentCoeff LaurentCoeff::specialize_x(int v_per_x) const {
  LaurentCoeff out;
  for (auto& [k, c] : terms_) out.add({k.first + v_per_x * k.second, 0}, c);
  return out;
}

std::complex<double> LaurentCoeff::eval(double v, std::complex<double> x) const {
  std::complex<double> s = 0;
  for (auto& [k, c] : terms_) s += to_double(c) * std::pow(v, k.first) * std::pow(x, k.second);
  return s;
}

std::string LaurentCoeff::str() const {
  if (terms_.empty()) return "0";
  // X-major order reads better when s is kept symbolic.
  std::map<std::pair<int, int>, const BigInt*> order;
  for (auto& [k, c] : terms_) order[{k.second, k.first}] = &c;
  std::string out;
  for (auto& [k, c] : order) {
    std::string body = power("v", k.second);
    std::string xpart = power("X", k.first);
    if (!xpart.empty()) body = body.empty() ? xpart : body + "*" + xpart;
    append_term(out, *c, body);
  }
  return out;
}

}  // namespace spherical
