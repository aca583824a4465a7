#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dpp/errors.hpp"

namespace dpp {

enum class DomainTag { FiniteSet, RealInterval, UnitCircle };

enum class QuadratureScheme { GaussLegendre, TrapezoidCircle, UniformFinite };

std::string to_string(DomainTag tag);

/// Finite node set with positive quadrature weights: the discretized (Lambda, mu).
/// Nodes are real scalars, or angles in [0, 2pi) for the unit circle; they are
/// stored sorted and strictly distinct. Immutable after construction.
class GroundSpace {
public:
  GroundSpace(DomainTag tag, std::vector<double> nodes, std::vector<double> weights,
              double a = 0.0, double b = 0.0);

  DomainTag domain() const { return tag_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }
  double node(std::size_t i) const { return nodes_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  /// Interval endpoints (RealInterval only).
  double lower() const { return a_; }
  double upper() const { return b_; }

  /// Sum_i f(x_i) w_i.
  double integrate(const std::function<double(double)>& f) const;

  /// Same nodes, weights scaled entrywise (used for thinned measures mu_b^theta).
  GroundSpace with_weights(std::vector<double> weights) const;

  nlohmann::json to_json() const;
  static GroundSpace from_json(const nlohmann::json& j);

private:
  DomainTag tag_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  double a_ = 0.0, b_ = 0.0;
};

/// Strictly increasing list of node indices: a simple point configuration.
class Configuration {
public:
  Configuration() = default;
  explicit Configuration(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  bool contains(std::size_t node) const;

  /// Union of two index-disjoint configurations.
  static Configuration merge(const Configuration& a, const Configuration& b);

private:
  std::vector<std::size_t> indices_;
};

/// Per-node observation probabilities theta in [0, 1].
class Marking {
public:
  Marking() = default;
  explicit Marking(std::vector<double> theta);
  static Marking constant(double c, std::size_t n);
  static Marking from_function(const GroundSpace& space,
                               const std::function<double(double)>& theta);

  const std::vector<double>& theta() const { return theta_; }
  double operator[](std::size_t i) const { return theta_[i]; }
  std::size_t size() const { return theta_.size(); }

private:
  std::vector<double> theta_;
};

/// Split configuration (xi_0 unobserved, xi_1 observed); index-disjoint.
struct MarkedConfiguration {
  Configuration zeros;
  Configuration ones;

  MarkedConfiguration() = default;
  MarkedConfiguration(Configuration z, Configuration o);
};

/// Quadrature discretization of (Lambda, mu).
///  - GaussLegendre on a real interval [a, b]: exact for polynomials of degree 2n-1.
///  - TrapezoidCircle: n uniform angles with weights 2pi/n.
///  - UniformFinite: nodes 0..n-1 with unit weights.
GroundSpace discretize(DomainTag tag, std::size_t n, QuadratureScheme scheme,
                       double a = -1.0, double b = 1.0);

/// Sub-space of the nodes selected by `keep`, weights preserved, plus the map
/// from new indices back to parent indices. Empty selection allowed.
std::pair<GroundSpace, std::vector<std::size_t>> restrict_space(
    const GroundSpace& space, const std::function<bool(double)>& keep);

}  // namespace dpp
