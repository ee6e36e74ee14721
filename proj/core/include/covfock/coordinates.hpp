#pragma once

namespace covfock {

struct CartesianPoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double x4 = 0.0;
};

/// Hyperspherical chart: x1 = r s cos(phi) sin(theta), x2 = r s sin(phi)
/// sin(theta), x3 = r s cos(theta), x4 = r u with s = sqrt(1-u^2);
/// r >= 0, u in [-1,1], theta in [0,pi], phi in [0,2pi).  The volume
/// element is r^3 sqrt(1-u^2) sin(theta) dr du dtheta dphi.
struct HyperPoint {
  double r = 0.0;
  double u = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Degenerate directions (r = 0, or a vanishing spatial part) map to zero
/// angles by convention.
HyperPoint cart_to_hyper(const CartesianPoint& p);
CartesianPoint hyper_to_cart(const HyperPoint& h);

}  // namespace covfock
