#include "covfock/coordinates.hpp"

#include <cmath>
#include <numbers>

namespace covfock {

HyperPoint cart_to_hyper(const CartesianPoint& p) {
  HyperPoint h;
  double rho2 = p.x1 * p.x1 + p.x2 * p.x2;
  double s2 = rho2 + p.x3 * p.x3;
  h.r = std::sqrt(s2 + p.x4 * p.x4);
  if (h.r == 0.0) return h;  // all coordinates zero by convention
  h.u = p.x4 / h.r;
  if (h.u > 1.0) h.u = 1.0;
  if (h.u < -1.0) h.u = -1.0;
  double s = std::sqrt(s2);
  if (s == 0.0) return h;  // pure x4 direction: theta = phi = 0
  h.theta = std::atan2(std::sqrt(rho2), p.x3);
  if (rho2 == 0.0) return h;
  h.phi = std::atan2(p.x2, p.x1);
  if (h.phi < 0.0) h.phi += 2.0 * std::numbers::pi;
  return h;
}

CartesianPoint hyper_to_cart(const HyperPoint& h) {
  CartesianPoint p;
  double s = std::sqrt(std::max(0.0, 1.0 - h.u * h.u));
  double rs = h.r * s;
  double st = std::sin(h.theta);
  p.x1 = rs * std::cos(h.phi) * st;
  p.x2 = rs * std::sin(h.phi) * st;
  p.x3 = rs * std::cos(h.theta);
  p.x4 = h.r * h.u;
  return p;
}

}  // namespace covfock
