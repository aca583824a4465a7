#include "dpp/ground.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

namespace dpp {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::string to_string(DomainTag tag) {
  switch (tag) {
    case DomainTag::FiniteSet: return "finite-set";
    case DomainTag::RealInterval: return "real-interval";
    case DomainTag::UnitCircle: return "unit-circle";
  }
  return "?";
}

GroundSpace::GroundSpace(DomainTag tag, std::vector<double> nodes,
                         std::vector<double> weights, double a, double b)
    : tag_(tag), nodes_(std::move(nodes)), weights_(std::move(weights)), a_(a), b_(b) {
  if (nodes_.size() != weights_.size())
    throw InvalidArgument("GroundSpace: nodes and weights must have equal length");
  for (double w : weights_)
    if (!(w > 0.0)) throw InvalidArgument("GroundSpace: weights must be strictly positive");
  if (!std::is_sorted(nodes_.begin(), nodes_.end()))
    throw InvalidArgument("GroundSpace: nodes must be sorted");
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (nodes_[i] == nodes_[i - 1])
      throw InvalidArgument("GroundSpace: tied nodes are an error, not merged");
  if (tag_ == DomainTag::UnitCircle)
    for (double t : nodes_)
      if (t < 0.0 || t >= kTwoPi)
        throw InvalidArgument("GroundSpace: circle angles must lie in [0, 2pi)");
}

double GroundSpace::integrate(const std::function<double(double)>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) s += f(nodes_[i]) * weights_[i];
  return s;
}

GroundSpace GroundSpace::with_weights(std::vector<double> weights) const {
  return GroundSpace(tag_, nodes_, std::move(weights), a_, b_);
}

nlohmann::json GroundSpace::to_json() const {
  nlohmann::json dom;
  dom["tag"] = to_string(tag_);
  if (tag_ == DomainTag::RealInterval) {
    dom["a"] = a_;
    dom["b"] = b_;
  }
  return nlohmann::json{{"domain", dom}, {"nodes", nodes_}, {"weights", weights_}};
}

GroundSpace GroundSpace::from_json(const nlohmann::json& j) {
  const auto& dom = j.at("domain");
  const std::string tag = dom.at("tag").get<std::string>();
  DomainTag t;
  double a = 0.0, b = 0.0;
  if (tag == "finite-set") {
    t = DomainTag::FiniteSet;
  } else if (tag == "real-interval") {
    t = DomainTag::RealInterval;
    a = dom.at("a").get<double>();
    b = dom.at("b").get<double>();
  } else if (tag == "unit-circle") {
    t = DomainTag::UnitCircle;
  } else {
    throw InvalidArgument("GroundSpace: unknown domain tag '" + tag + "'");
  }
  return GroundSpace(t, j.at("nodes").get<std::vector<double>>(),
                     j.at("weights").get<std::vector<double>>(), a, b);
}

Configuration::Configuration(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  if (!std::is_sorted(indices_.begin(), indices_.end()))
    throw InvalidArgument("Configuration: indices must be strictly increasing");
  for (std::size_t i = 1; i < indices_.size(); ++i)
    if (indices_[i] == indices_[i - 1])
      throw InvalidArgument("Configuration: repeated index violates simplicity");
}

bool Configuration::contains(std::size_t node) const {
  return std::binary_search(indices_.begin(), indices_.end(), node);
}

Configuration Configuration::merge(const Configuration& a, const Configuration& b) {
  std::vector<std::size_t> out;
  out.reserve(a.size() + b.size());
  std::merge(a.indices().begin(), a.indices().end(), b.indices().begin(), b.indices().end(),
             std::back_inserter(out));
  return Configuration(std::move(out));  // validates disjointness
}

Marking::Marking(std::vector<double> theta) : theta_(std::move(theta)) {
  for (double t : theta_)
    if (!(t >= 0.0 && t <= 1.0))
      throw InvalidArgument("Marking: theta values must lie in [0, 1]");
}

Marking Marking::constant(double c, std::size_t n) {
  return Marking(std::vector<double>(n, c));
}

Marking Marking::from_function(const GroundSpace& space,
                               const std::function<double(double)>& theta) {
  std::vector<double> t(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) t[i] = theta(space.node(i));
  return Marking(std::move(t));
}

MarkedConfiguration::MarkedConfiguration(Configuration z, Configuration o)
    : zeros(std::move(z)), ones(std::move(o)) {
  Configuration::merge(zeros, ones);  // throws if not disjoint
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
void gauss_legendre_reference(std::size_t n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double z1, pp;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * static_cast<double>(j) + 1.0) * z * p2 - static_cast<double>(j) * p3) /
             (static_cast<double>(j) + 1.0);
      }
      pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::abs(z - z1) > 1e-15);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

}  // namespace

GroundSpace discretize(DomainTag tag, std::size_t n, QuadratureScheme scheme, double a,
                       double b) {
  if (n == 0) throw InvalidArgument("discretize: n must be >= 1");
  switch (scheme) {
    case QuadratureScheme::GaussLegendre: {
      if (tag != DomainTag::RealInterval)
        throw InvalidArgument("discretize: gauss-legendre requires a real interval");
      if (!(a < b)) throw InvalidArgument("discretize: interval requires a < b");
      std::vector<double> x, w;
      gauss_legendre_reference(n, x, w);
      const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = mid + half * x[i];
        w[i] *= half;
      }
      return GroundSpace(DomainTag::RealInterval, std::move(x), std::move(w), a, b);
    }
    case QuadratureScheme::TrapezoidCircle: {
      if (tag != DomainTag::UnitCircle)
        throw InvalidArgument("discretize: trapezoid-circle requires the unit circle");
      std::vector<double> x(n), w(n, kTwoPi / static_cast<double>(n));
      for (std::size_t i = 0; i < n; ++i)
        x[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
      return GroundSpace(DomainTag::UnitCircle, std::move(x), std::move(w));
    }
    case QuadratureScheme::UniformFinite: {
      if (tag != DomainTag::FiniteSet)
        throw InvalidArgument("discretize: uniform-finite requires a finite set");
      std::vector<double> x(n), w(n, 1.0);
      for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i);
      return GroundSpace(DomainTag::FiniteSet, std::move(x), std::move(w));
    }
  }
  throw InvalidArgument("discretize: unknown scheme");
}

std::pair<GroundSpace, std::vector<std::size_t>> restrict_space(
    const GroundSpace& space, const std::function<bool(double)>& keep) {
  std::vector<double> nodes, weights;
  std::vector<std::size_t> index_map;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (keep(space.node(i))) {
      nodes.push_back(space.node(i));
      weights.push_back(space.weight(i));
      index_map.push_back(i);
    }
  }
  return {GroundSpace(space.domain(), std::move(nodes), std::move(weights), space.lower(),
                      space.upper()),
          std::move(index_map)};
}

}  // namespace dpp
