#include "exrot/mixture.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "exrot/hermite.hpp"
#include "exrot/quadrature.hpp"
#include "exrot/rng.hpp"

namespace exrot {

namespace {
nlohmann::json component_json(const MixtureComponent& c) {
  return {{"w", c.weight}, {"mu", c.mean}, {"sigma", c.sigma}};
}
}  // namespace

NormalMixture::NormalMixture(std::vector<MixtureComponent> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("NormalMixture: no components");
  double total = 0.0;
  for (const auto& c : components_) {
    if (!(c.sigma > 0.0))
      throw std::invalid_argument("NormalMixture: scales must be positive");
    total += c.weight;
    cdf_.push_back(total);
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("NormalMixture: weights must sum to 1");
  cdf_.back() = 1.0;
}

double NormalMixture::pdf(double x) const { return derivative(x, 0); }

double NormalMixture::derivative(double x, int order) const {
  if (order < 0) throw std::invalid_argument("derivative: negative order");
  double out = 0.0;
  for (const auto& c : components_)
    out += c.weight * gaussian_derivative_1d(order, x, c.mean, c.sigma);
  return out;
}

SampleSet NormalMixture::sample(std::size_t n, std::uint64_t seed) const {
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  SampleSet out;
  out.seed = seed;
  out.values.reserve(n);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.next_uniform();
    std::size_t k = 0;
    while (k + 1 < components_.size() && u >= cdf_[k]) ++k;
    const auto& c = components_[k];
    out.values.push_back(c.mean + c.sigma * rng.next_normal());
  }
  return out;
}

double NormalMixture::mean() const {
  double m = 0.0;
  for (const auto& c : components_) m += c.weight * c.mean;
  return m;
}

double NormalMixture::variance() const {
  const double mu = mean();
  double v = 0.0;
  for (const auto& c : components_) {
    const double d = c.mean - mu;
    v += c.weight * (c.sigma * c.sigma + d * d);
  }
  return v;
}

double NormalMixture::central_moment(int k) const {
  if (k < 0 || k > 4)
    throw std::invalid_argument("central_moment: supported orders are 0..4");
  const double mu = mean();
  double m = 0.0;
  for (const auto& c : components_) {
    const double d = c.mean - mu;
    const double s2 = c.sigma * c.sigma;
    double term = 0.0;
    switch (k) {
      case 0: term = 1.0; break;
      case 1: term = d; break;
      case 2: term = d * d + s2; break;
      case 3: term = d * d * d + 3.0 * d * s2; break;
      case 4: term = d * d * d * d + 6.0 * d * d * s2 + 3.0 * s2 * s2; break;
    }
    m += c.weight * term;
  }
  return m;
}

std::pair<double, double> NormalMixture::support(double z) const {
  double lo = components_[0].mean - z * components_[0].sigma;
  double hi = components_[0].mean + z * components_[0].sigma;
  for (const auto& c : components_) {
    lo = std::min(lo, c.mean - z * c.sigma);
    hi = std::max(hi, c.mean + z * c.sigma);
  }
  return {lo, hi};
}

double NormalMixture::tail_mass_outside(double lo, double hi) const {
  double mass = 0.0;
  for (const auto& c : components_) {
    const double zl = (lo - c.mean) / (c.sigma * std::numbers::sqrt2);
    const double zh = (hi - c.mean) / (c.sigma * std::numbers::sqrt2);
    mass += c.weight * (1.0 - 0.5 * (std::erf(zh) - std::erf(zl)));
  }
  return mass;
}

namespace {

// The Marron–Wand catalogue. Weights/means/scales follow the published
// mixture definitions; each entry is guarded by normalization and moment
// tests in the suite.
NormalMixture build_marron_wand(int id) {
  using C = MixtureComponent;
  std::vector<C> cs;
  switch (id) {
    case 1:  // Gaussian
      cs = {{1.0, 0.0, 1.0}};
      break;
    case 2:  // Skewed Unimodal
      cs = {{1.0 / 5, 0.0, 1.0},
            {1.0 / 5, 0.5, 2.0 / 3},
            {3.0 / 5, 13.0 / 12, 5.0 / 9}};
      break;
    case 3:  // Strongly Skewed
      for (int l = 0; l < 8; ++l) {
        const double s = std::pow(2.0 / 3.0, l);
        cs.push_back({1.0 / 8, 3.0 * (s - 1.0), s});
      }
      break;
    case 4:  // Kurtotic Unimodal
      cs = {{2.0 / 3, 0.0, 1.0}, {1.0 / 3, 0.0, 0.1}};
      break;
    case 5:  // Outlier
      cs = {{1.0 / 10, 0.0, 1.0}, {9.0 / 10, 0.0, 0.1}};
      break;
    case 6:  // Bimodal
      cs = {{0.5, -1.0, 2.0 / 3}, {0.5, 1.0, 2.0 / 3}};
      break;
    case 7:  // Separated Bimodal
      cs = {{0.5, -1.5, 0.5}, {0.5, 1.5, 0.5}};
      break;
    case 8:  // Skewed Bimodal
      cs = {{3.0 / 4, 0.0, 1.0}, {1.0 / 4, 1.5, 1.0 / 3}};
      break;
    case 9:  // Trimodal
      cs = {{9.0 / 20, -6.0 / 5, 3.0 / 5},
            {9.0 / 20, 6.0 / 5, 3.0 / 5},
            {1.0 / 10, 0.0, 1.0 / 4}};
      break;
    case 10:  // Claw
      cs = {{0.5, 0.0, 1.0}};
      for (int l = 0; l <= 4; ++l) cs.push_back({1.0 / 10, l / 2.0 - 1.0, 0.1});
      break;
    case 11:  // Double Claw
      cs = {{49.0 / 100, -1.0, 2.0 / 3}, {49.0 / 100, 1.0, 2.0 / 3}};
      for (int l = 0; l <= 6; ++l)
        cs.push_back({1.0 / 350, (l - 3.0) / 2.0, 0.01});
      break;
    case 12:  // Asymmetric Claw
      cs = {{0.5, 0.0, 1.0}};
      for (int l = -2; l <= 2; ++l)
        cs.push_back({std::pow(2.0, 1 - l) / 31.0, l + 0.5,
                      std::pow(2.0, -l) / 10.0});
      break;
    case 13:  // Asymmetric Double Claw
      cs = {{46.0 / 100, -1.0, 2.0 / 3}, {46.0 / 100, 1.0, 2.0 / 3}};
      for (int l = 1; l <= 3; ++l) cs.push_back({1.0 / 300, -l / 2.0, 0.01});
      for (int l = 1; l <= 3; ++l) cs.push_back({7.0 / 300, l / 2.0, 0.07});
      break;
    case 14:  // Smooth Comb
      for (int l = 0; l <= 5; ++l)
        cs.push_back({std::pow(2.0, 5 - l) / 63.0,
                      (65.0 - 96.0 * std::pow(0.5, l)) / 21.0,
                      (32.0 / 63.0) / std::pow(2.0, l)});
      break;
    case 15:  // Discrete Comb
      for (int l = 0; l <= 2; ++l)
        cs.push_back({2.0 / 7, (12.0 * l - 15.0) / 7.0, 2.0 / 7});
      for (int l = 8; l <= 10; ++l)
        cs.push_back({1.0 / 21, 2.0 * l / 7.0, 1.0 / 21});
      break;
    default:
      throw std::out_of_range("marron_wand: id must be in 1..15");
  }
  return NormalMixture(std::move(cs));
}

const std::array<std::string, 15> kNames = {
    "Gaussian",          "Skewed Unimodal",       "Strongly Skewed",
    "Kurtotic Unimodal", "Outlier",               "Bimodal",
    "Separated Bimodal", "Skewed Bimodal",        "Trimodal",
    "Claw",              "Double Claw",           "Asymmetric Claw",
    "Asymmetric Double Claw", "Smooth Comb",      "Discrete Comb"};

}  // namespace

NormalMixture marron_wand(int id) { return build_marron_wand(id); }

const std::string& marron_wand_name(int id) {
  if (id < 1 || id > kMarronWandCount)
    throw std::out_of_range("marron_wand_name: id must be in 1..15");
  return kNames[id - 1];
}

double mixture_true_roughness(const NormalMixture& m, int deriv_order) {
  if (deriv_order != 2 && deriv_order != 3)
    throw std::invalid_argument("mixture_true_roughness: order must be 2 or 3");
  const auto [lo, hi] = m.support(10.0);
  return integrate(
      [&](double x) {
        const double g = m.derivative(x, deriv_order);
        return g * g;
      },
      lo, hi, 1e-10);
}

std::string marron_wand_catalogue_json() {
  nlohmann::json out = nlohmann::json::array();
  for (int id = 1; id <= kMarronWandCount; ++id) {
    const NormalMixture m = marron_wand(id);
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : m.components()) comps.push_back(component_json(c));
    out.push_back(
        {{"id", id}, {"name", marron_wand_name(id)}, {"components", comps}});
  }
  return out.dump(2);
}

}  // namespace exrot
