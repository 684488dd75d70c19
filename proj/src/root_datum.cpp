#include "spherical/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace spherical {

namespace {

Weight unit(std::size_t m, std::size_t i) {
  Weight w(m);
  w[i] = 1;
  return w;
}

// Inverse of a small integer matrix over the rationals; throws if singular.
std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InvalidInput("Cartan matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::int64_t>> cartan_of_type(char type, int r) {
  std::vector<std::vector<std::int64_t>> a(r, std::vector<std::int64_t>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':
      if (r < 2) throw InvalidInput("type B needs rank >= 2");
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      a[r - 1][r - 2] = -2;
      break;
    case 'C':
      if (r < 2) throw InvalidInput("type C needs rank >= 2");
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      a[r - 2][r - 1] = -2;
      break;
    case 'D':
      if (r < 3) throw InvalidInput("type D needs rank >= 3");
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case 'G':
      if (r != 2) throw InvalidInput("type G exists only in rank 2");
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw InvalidInput(std::string("unknown Cartan type ") + type);
  }
  return a;
}

}  // namespace

RootDatum::RootDatum(std::string label, std::size_t m, Weight sigma,
                     std::vector<Weight> simple_roots, std::vector<Weight> simple_coroots)
    : label_(std::move(label)),
      m_(m),
      sigma_(std::move(sigma)),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)) {
  derive();
}

void RootDatum::check_length(const Weight& w, const char* what) const {
  if (w.size() != m_)
    throw InvalidInput(std::string(what) + " " + w.str() + " has length " +
                       std::to_string(w.size()) + ", expected " + std::to_string(m_));
}

void RootDatum::derive() {
  if (m_ == 0) throw InvalidInput("coweight rank must be positive");
  check_length(sigma_, "sigma");
  if (simple_roots_.size() != simple_coroots_.size())
    throw InvalidInput("simple roots and coroots differ in number");
  const std::size_t r = simple_roots_.size();
  for (std::size_t i = 0; i < r; ++i) {
    check_length(simple_roots_[i], "simple root");
    check_length(simple_coroots_[i], "simple coroot");
    if (sigma_.dot(simple_roots_[i]) != 0)
      throw InvalidInput("sigma must vanish on simple root " + simple_roots_[i].str());
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      auto aij = cartan(i, j), aji = cartan(j, i);
      if (i == j && aij != 2) throw InvalidInput("Cartan diagonal entry is not 2");
      if (i != j && (aij > 0 || (aij == 0) != (aji == 0)))
        throw InvalidInput("simple data do not form a Cartan matrix");
    }

  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a[i][j] = Rational(cartan(i, j));
  cartan_inv_ = r ? rational_inverse(a) : decltype(cartan_inv_){};

  // Positive roots by closing the simple roots under simple reflections,
  // tracking the matching coroot along each path.
  std::map<std::vector<std::int64_t>, Weight> found;
  std::deque<std::vector<std::int64_t>> queue;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> c(r, 0);
    c[i] = 1;
    found.emplace(c, simple_coroots_[i]);
    queue.push_back(c);
  }
  auto to_vector = [&](const std::vector<std::int64_t>& c) {
    Weight v(m_);
    for (std::size_t i = 0; i < r; ++i) v += simple_roots_[i] * c[i];
    return v;
  };
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    const Weight coroot = found.at(c);
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t p = 0;
      for (std::size_t i = 0; i < r; ++i) p += c[i] * cartan(j, i);
      if (p == 0) continue;
      auto d = c;
      d[j] -= p;
      if (std::any_of(d.begin(), d.end(), [](auto x) { return x < 0; })) continue;
      if (found.count(d)) continue;
      if (found.size() > 10000) throw InvalidInput("root system is not finite");
      Weight image = coroot - simple_coroots_[j] * coroot.dot(simple_roots_[j]);
      found.emplace(d, image);
      queue.push_back(d);
    }
  }

  // Order by height, then reverse lexicographically, for determinism.
  std::vector<std::vector<std::int64_t>> order;
  for (auto& kv : found) order.push_back(kv.first);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    auto hx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    auto hy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
    if (hx != hy) return hx < hy;
    return x > y;
  });
  positive_roots_.clear();
  positive_coroots_.clear();
  positive_roots_simple_ = order;
  rho_b_times_2_ = Weight(m_);
  two_rho_hat_ = Weight(m_);
  for (auto& c : order) {
    positive_roots_.push_back(to_vector(c));
    positive_coroots_.push_back(found.at(c));
    two_rho_hat_ += positive_roots_.back();
    rho_b_times_2_ += positive_coroots_.back();
  }

  // Longest element: push the regular dominant vector into the
  // antidominant chamber one simple reflection at a time.
  w0_ = IntMatrix::identity(m_);
  Weight v = two_rho_hat_;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < r; ++i) {
      if (simple_coroots_[i].dot(v) > 0) {
        v = reflect(i, v);
        w0_ = reflection_matrix(i) * w0_;
        moved = true;
        break;
      }
    }
  }
}

RootDatum RootDatum::gl(int n) {
  if (n < 1) throw InvalidInput("GL(n) needs n >= 1");
  const std::size_t m = static_cast<std::size_t>(n);
  Weight sigma(m);
  for (std::size_t i = 0; i < m; ++i) sigma[i] = 1;
  std::vector<Weight> roots, coroots;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    Weight a = unit(m, i) - unit(m, i + 1);
    roots.push_back(a);
    coroots.push_back(a);
  }
  return RootDatum("GL" + std::to_string(n), m, sigma, roots, coroots);
}

RootDatum RootDatum::simple_type(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  if (rank < 1) throw InvalidInput("rank must be positive");
  auto a = cartan_of_type(type, rank);
  const std::size_t m = static_cast<std::size_t>(rank) + 1;
  std::vector<Weight> roots, coroots;
  for (int j = 0; j < rank; ++j) {
    Weight alpha(m);
    for (int i = 0; i < rank; ++i) alpha[i + 1] = a[i][j];
    roots.push_back(alpha);
    coroots.push_back(unit(m, j + 1));
  }
  return RootDatum(std::string(1, type) + std::to_string(rank), m, unit(m, 0), roots, coroots);
}

RootDatum RootDatum::preset(const std::string& name) {
  std::string s;
  for (char ch : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  auto number = [&](std::size_t from) {
    std::string digits = s.substr(from);
    if (digits.empty() || digits.size() > 2 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
      throw InvalidInput("unknown preset: " + name);
    return std::stoi(digits);
  };
  if (s.rfind("gl", 0) == 0) return gl(number(2));
  if (s.size() >= 2 && std::string("abcdg").find(s[0]) != std::string::npos)
    return simple_type(s[0], number(1));
  throw InvalidInput("unknown preset: " + name);
}

std::int64_t RootDatum::sigma_grade(const Weight& w) const {
  check_length(w, "weight");
  return sigma_.dot(w);
}

Rational RootDatum::pair_rho_b(const Weight& w) const {
  check_length(w, "weight");
  return Rational(rho_b_times_2_.dot(w), 2);
}

bool RootDatum::is_dominant(const Weight& w) const {
  check_length(w, "weight");
  for (auto& c : simple_coroots_)
    if (c.dot(w) < 0) return false;
  return true;
}

Weight RootDatum::reflect(std::size_t i, const Weight& w) const {
  return w - simple_roots_[i] * simple_coroots_[i].dot(w);
}

IntMatrix RootDatum::reflection_matrix(std::size_t i) const {
  IntMatrix s = IntMatrix::identity(m_);
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = 0; b < m_; ++b) s.at(a, b) -= simple_roots_[i][a] * simple_coroots_[i][b];
  return s;
}

std::optional<std::vector<std::int64_t>> RootDatum::simple_coordinates(const Weight& beta) const {
  check_length(beta, "weight");
  const std::size_t r = simple_roots_.size();
  std::vector<std::int64_t> b(r);
  for (std::size_t j = 0; j < r; ++j) b[j] = simple_coroots_[j].dot(beta);
  std::vector<std::int64_t> c(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational x = 0;
    for (std::size_t j = 0; j < r; ++j) x += cartan_inv_[i][j] * b[j];
    if (boost::multiprecision::denominator(x) != 1) return std::nullopt;
    c[i] = boost::multiprecision::numerator(x).convert_to<std::int64_t>();
  }
  Weight back(m_);
  for (std::size_t i = 0; i < r; ++i) back += simple_roots_[i] * c[i];
  if (back != beta) return std::nullopt;
  return c;
}

std::string RootDatum::fingerprint() const {
  std::string s = label_ + "|" + std::to_string(m_) + "|" + sigma_.str();
  for (auto& a : simple_roots_) s += "|" + a.str();
  s += "|";
  for (auto& a : simple_coroots_) s += "|" + a.str();
  return s;
}

WeylGroup::WeylGroup(const RootDatum& rd, std::size_t cap) {
  const std::size_t r = rd.semisimple_rank();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < r; ++i) gens.push_back(rd.reflection_matrix(i));
  const Weight probe = rd.two_rho_hat();
  std::map<Weight, std::size_t> seen;
  elements_.push_back({IntMatrix::identity(rd.coweight_rank()), 0, {}});
  seen.emplace(probe, 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      IntMatrix next = gens[i] * elements_[head].action;
      Weight key = next.apply(probe);
      if (seen.count(key)) continue;
      if (elements_.size() >= cap)
        throw CapExceeded("Weyl group exceeds the cap of " + std::to_string(cap) + " elements");
      WeylElement e{next, elements_[head].length + 1, {static_cast<int>(i)}};
      e.word.insert(e.word.end(), elements_[head].word.begin(), elements_[head].word.end());
      seen.emplace(key, elements_.size());
      elements_.push_back(std::move(e));
    }
  }
}

std::int64_t RepSpec::dimension() const {
  std::int64_t d = 0;
  for (auto& [w, k] : weights) d += k;
  return d;
}

std::vector<Weight> RepSpec::weight_list() const {
  std::vector<Weight> out;
  for (auto& [w, k] : weights)
    for (std::int64_t i = 0; i < k; ++i) out.push_back(w);
  return out;
}

bool dominance_leq(const RootDatum& rd, const Weight& mu, const Weight& lambda) {
  rd.check_length(mu, "weight");
  rd.check_length(lambda, "weight");
  auto c = rd.simple_coordinates(lambda - mu);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](auto x) { return x >= 0; });
}

std::vector<Weight> dominant_below(const RootDatum& rd, const Weight& lambda) {
  if (!rd.is_dominant(lambda)) throw InvalidInput("weight " + lambda.str() + " is not dominant");
  std::set<Weight, std::greater<>> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (auto& beta : rd.positive_roots()) {
      Weight next = w - beta;
      if (!rd.is_dominant(next) || seen.count(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::int64_t l_constant(const RootDatum& rd, const RepSpec& rho) {
  return rd.twice_pair_rho_b(rho.highest_weight);
}

ValidationReport validate_rho(const RootDatum& rd, const RepSpec& rho) {
  ValidationReport report;
  auto fail = [&](std::string why) {
    report.pass = false;
    report.failures.push_back(std::move(why));
  };
  if (rho.highest_weight.size() != rd.coweight_rank()) {
    fail("highest weight has the wrong length");
    return report;
  }
  if (!rd.is_dominant(rho.highest_weight)) fail("highest weight is not dominant");
  std::vector<std::vector<Rational>> rows;
  for (auto& [w, k] : rho.weights) {
    if (w.size() != rd.coweight_rank()) {
      fail("weight " + w.str() + " has the wrong length");
      continue;
    }
    if (rd.sigma_grade(w) != 1)
      fail("weight " + w.str() + " has sigma-grade " + std::to_string(rd.sigma_grade(w)));
    std::vector<Rational> row;
    for (auto x : w) row.emplace_back(x);
    rows.push_back(std::move(row));
  }
  if (rational_rank(rows) != rd.coweight_rank())
    fail("weights do not span the dual space; the torus does not act faithfully");
  return report;
}

}  // namespace spherical
