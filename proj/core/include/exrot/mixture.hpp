#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace exrot {

struct MixtureComponent {
  double weight;
  double mean;
  double sigma;
};

/// One draw set from a mixture, tagged with the seed that produced it.
struct SampleSet {
  std::vector<double> values;
  std::uint64_t seed = 0;
};

/// Finite normal mixture with exact pdf, derivatives, moments and sampling.
class NormalMixture {
 public:
  explicit NormalMixture(std::vector<MixtureComponent> components);

  const std::vector<MixtureComponent>& components() const { return components_; }

  double pdf(double x) const;
  /// Exact mixture derivative of the given order (order 0 is the pdf).
  double derivative(double x, int order) const;

  /// n i.i.d. draws, deterministic for a given seed: categorical component
  /// choice followed by a Gaussian draw, both from one splitmix64 stream.
  SampleSet sample(std::size_t n, std::uint64_t seed) const;

  double mean() const;
  double variance() const;
  /// Central moment of order k <= 4, in closed form.
  double central_moment(int k) const;

  /// [lo, hi] with per-component tails beyond z sigmas excluded.
  std::pair<double, double> support(double z = 10.0) const;
  /// Mixture probability mass outside [lo, hi].
  double tail_mass_outside(double lo, double hi) const;

 private:
  std::vector<MixtureComponent> components_;
  std::vector<double> cdf_;  // cumulative weights for sampling
};

/// The 15 Marron–Wand normal-mixture benchmark densities, 1-based ids.
NormalMixture marron_wand(int id);
const std::string& marron_wand_name(int id);
constexpr int kMarronWandCount = 15;

/// Ground-truth roughness of the deriv_order-th derivative,
/// int (f^{(k)})^2 dx, by adaptive quadrature (deriv_order in {2, 3}).
double mixture_true_roughness(const NormalMixture& m, int deriv_order);

/// JSON catalogue {id, name, components:[{w, mu, sigma}]} of all 15 densities.
std::string marron_wand_catalogue_json();

}  // namespace exrot
