#pragma once

// Root data of unramified reductive groups with a chosen character sigma.
//
// Coordinates are those of the coweight lattice of G, which is the weight
// lattice of the dual group. Roots below are therefore coroots of G (roots
// of the dual group) and "coroots" are roots of G, stored as linear forms.

#include "spherical/numbers.hpp"
#include "spherical/weight.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spherical {

inline constexpr std::size_t kDefaultWeylCap = 50000;

class RootDatum {
 public:
  // Builds and validates from simple data. simple_roots are vectors,
  // simple_coroots and sigma are linear forms, all of length m.
  RootDatum(std::string label, std::size_t m, Weight sigma, std::vector<Weight> simple_roots,
            std::vector<Weight> simple_coroots);

  static RootDatum gl(int n);
  // Dual group G_m x (simply connected group of the given type), with sigma
  // the projection to the first factor. type is one of A B C D G.
  static RootDatum simple_type(char type, int rank);
  // "gl3", "A2", "c2", ...
  static RootDatum preset(const std::string& name);

  const std::string& label() const { return label_; }
  std::size_t coweight_rank() const { return m_; }
  std::size_t semisimple_rank() const { return simple_roots_.size(); }
  const Weight& sigma() const { return sigma_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const std::vector<Weight>& positive_coroots() const { return positive_coroots_; }
  // Positive roots written in simple-root coordinates, same order.
  const std::vector<std::vector<std::int64_t>>& positive_roots_simple() const {
    return positive_roots_simple_;
  }
  // Sum of positive coroots as a linear form; pairing with it is 2<rho_B, .>.
  const Weight& rho_b_times_2() const { return rho_b_times_2_; }
  // Sum of positive roots of the dual group; the shift in Weyl-type sums.
  const Weight& two_rho_hat() const { return two_rho_hat_; }
  // a(i,j) = <alpha_j, coroot_i>
  std::int64_t cartan(std::size_t i, std::size_t j) const {
    return simple_coroots_[i].dot(simple_roots_[j]);
  }
  const IntMatrix& longest_element() const { return w0_; }

  std::int64_t sigma_grade(const Weight& w) const;
  Rational pair_rho_b(const Weight& w) const;
  std::int64_t twice_pair_rho_b(const Weight& w) const { return rho_b_times_2_.dot(w); }
  bool is_dominant(const Weight& w) const;
  Weight reflect(std::size_t i, const Weight& w) const;
  IntMatrix reflection_matrix(std::size_t i) const;

  // Coordinates of beta in the basis of simple roots, or nullopt when beta
  // is not an integral combination of them.
  std::optional<std::vector<std::int64_t>> simple_coordinates(const Weight& beta) const;

  // Stable text identifying the datum, used to key persistent caches.
  std::string fingerprint() const;

  void check_length(const Weight& w, const char* what) const;

 private:
  void derive();

  std::string label_;
  std::size_t m_ = 0;
  Weight sigma_;
  std::vector<Weight> simple_roots_, simple_coroots_;
  std::vector<Weight> positive_roots_, positive_coroots_;
  std::vector<std::vector<std::int64_t>> positive_roots_simple_;
  Weight rho_b_times_2_, two_rho_hat_;
  IntMatrix w0_;
  std::vector<std::vector<Rational>> cartan_inv_;
};

struct WeylElement {
  IntMatrix action;
  int length = 0;
  std::vector<int> word;  // reduced word in simple reflections, applied right to left
};

class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& rd, std::size_t cap = kDefaultWeylCap);
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  std::vector<WeylElement> elements_;
};

// Representation data: highest weight together with the weight multiset.
struct RepSpec {
  Weight highest_weight;
  std::map<Weight, std::int64_t, std::greater<>> weights;
  std::int64_t dimension() const;
  std::vector<Weight> weight_list() const;  // with multiplicity
};

struct ValidationReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// mu <= lambda iff lambda - mu is a nonnegative integral sum of simple roots.
bool dominance_leq(const RootDatum& rd, const Weight& mu, const Weight& lambda);

// All dominant mu <= lambda in reverse lexicographic order.
std::vector<Weight> dominant_below(const RootDatum& rd, const Weight& lambda);

// l = 2<rho_B, lambda_rho>
std::int64_t l_constant(const RootDatum& rd, const RepSpec& rho);

// Every weight has sigma-grade 1 and the weights span the dual space.
// The span test is a torus-level proxy for faithfulness.
ValidationReport validate_rho(const RootDatum& rd, const RepSpec& rho);

}  // namespace spherical
