#pragma once

#include "bcr/diagram.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace bcr::mc {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Long embedding R^n -> R^(n+2), standard outside a bounded region.
class Embedding {
 public:
  virtual ~Embedding() = default;
  virtual int n() const = 0;
  virtual std::string name() const = 0;
  // Image of x; J (if given) receives the (n+2) x n Jacobian.
  virtual Vec eval(const Vec& x, Mat* J = nullptr) const = 0;
};

std::shared_ptr<const Embedding> standard_plane(int n = 3);

struct WheelGeometry {
  int k = 2;
  double eps = 0.1;
  double height_ratio = 1.0 / 16;  // clasp height / eps^2
  double reach_ratio = 0.3;        // clasp radius around D_j / eps^2
  // D_j: ball of radius eps^2 at (j,0,0). A_j: annulus eps/2 <= |x - c_j| <= 2eps/3, c_j = (j mod k + 1, 0, 0).
  Eigen::Vector3d disk_center(int j) const;
  Eigen::Vector3d annulus_center(int j) const;
  double disk_radius() const { return eps * eps; }
  double inner_radius() const { return eps / 2; }
  double outer_radius() const { return 2 * eps / 3; }
};

void validate_geometry(const WheelGeometry& g);

// psi^S: crossings in `unclasped` (1-based) are standard; every other A_j wraps around D_j.
std::shared_ptr<const Embedding> wheel_embedding(const WheelGeometry& g, const std::set<int>& unclasped = {});

struct MCConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  double delta = 1e-6;  // minimum distance between points entering a Gauss map
  int batches = 40;
  int threads = 0;  // 0: hardware concurrency
  double scale = 1.0;  // tangent change of variables x = scale * tan(pi (u - 1/2))
  bool antithetic = false;  // average each sample with its mirror image across the plane
};

void validate_config(const MCConfig& c);

struct Estimate {
  double mean = 0;
  double stderr_ = 0;
  std::vector<double> batch_means;
  std::uint64_t samples = 0;
  std::uint64_t n_effective = 0;  // samples surviving the cutoff
  bool variance_warning = false;  // batch means too dispersed for a trustworthy error bar
};

Vec gauss_direction(const Vec& a, const Vec& b);

// Oriented orthonormal basis F of u-perp with det[u F] = +1.
Mat tangent_frame(const Vec& u);

double sphere_volume(int p);  // volume of the unit S^p

// One Gauss-map factor of a form. Points are indexed knot points first, then ambient points.
// theta: u(P(to) - P(from)) on S^(n+1), P = psi on knot points; eta: u'(x_to - x_from) on S^(n-1), knot points only.
struct Factor {
  EdgeKind kind;
  int from;
  int to;
};

// Density of the wedge of pulled-back unit volume forms against the coordinate volume of
// (R^n)^knot x (R^(n+2))^ambient. Exact 0 when two factors of one kind share an unordered pair.
double form_density(const std::vector<Factor>& factors, const Embedding& psi, const std::vector<Vec>& knot,
                    const std::vector<Vec>& ambient);
// Chord diagrams: vertex i is knot point i, factors in edge order.
double form_density(const JacobiDiagram& d, const Embedding& psi, const std::vector<Vec>& knot);
std::vector<Factor> factors_of(const JacobiDiagram& d);

// Fills one value per estimated quantity; returns false when the sample falls inside the cutoff.
using Sampler = std::function<bool(std::mt19937_64&, std::vector<double>&)>;
// Batch b draws from its own generator seeded by (seed, b); results do not depend on the thread count.
std::vector<Estimate> run_batches(const MCConfig& cfg, int quantities, const std::function<Sampler()>& make);

struct HopfPair {
  double separation = 0;  // shift of the 3-sphere along x3
  bool reverse_circle = false;
};

// Gauss linking integral of the unit circle in the x1x2-plane and the unit 3-sphere centred at e1 inside x2 = 0.
Estimate linking_estimate(const HopfPair& h, const MCConfig& cfg);

// Phi_j(psi^S) - Phi_j(psi^(S+j)) over A_j x D_j; swapped exchanges the two embeddings.
Estimate phi_difference_estimate(int k, int j, double eps, const MCConfig& cfg, bool swapped = false,
                                 const WheelGeometry* geometry = nullptr);

struct Z2Terms {
  Estimate total;
  Estimate internal_term;  // 1/2 int theta14 theta24 theta34 eta12
  Estimate triangle_term;  // -1/2 int theta13 theta24 eta12 eta23
  Estimate wheel_term;     // 1/4 int theta13 theta24 eta12 eta34
};

// Integrand factors of the three terms (before coefficients).
std::vector<Factor> z2_internal_factors();
std::vector<Factor> z2_triangle_factors();
std::vector<Factor> z2_wheel_factors();

// Importance regions: balls (centre, radius) in R^n where psi departs from the plane; may be empty.
Z2Terms z2_estimate(const Embedding& psi, const MCConfig& cfg, const std::vector<std::pair<Vec, double>>& regions = {});

// Annulus balls and twice-radius disk balls of a wheel embedding.
std::vector<std::pair<Vec, double>> wheel_regions(const WheelGeometry& g);

}  // namespace bcr::mc
