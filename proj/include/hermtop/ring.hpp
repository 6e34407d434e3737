#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hermtop/numeric.hpp"

namespace hermtop {

// Fundamental discriminant D < 0.  Either D = 1 (mod 4) squarefree, or
// D = 4m with m = 2,3 (mod 4) squarefree.
class Disc {
 public:
  explicit Disc(long long d);
  long long value() const { return d_; }
  // N(tau) = (D^2 - D)/4, the constant term of tau's minimal polynomial.
  long long tau_norm() const { return (d_ * d_ - d_) / 4; }
  bool euclidean() const {
    return d_ == -3 || d_ == -4 || d_ == -7 || d_ == -8 || d_ == -11;
  }
  bool operator==(const Disc& o) const { return d_ == o.d_; }

 private:
  long long d_;
};

// Element x + y*tau of the maximal order A = Z[tau], tau = (D + sqrt(D))/2.
// tau^2 = D*tau - (D^2 - D)/4.
struct RingElem {
  long long x = 0;
  long long y = 0;
  long long d = 0;  // discriminant tag

  RingElem() = default;
  RingElem(long long x_, long long y_, long long d_) : x(x_), y(y_), d(d_) {}

  bool is_zero() const { return x == 0 && y == 0; }
  bool operator==(const RingElem& o) const {
    return x == o.x && y == o.y && d == o.d;
  }
  bool operator!=(const RingElem& o) const { return !(*this == o); }
};

void require_same_disc(const RingElem& a, const RingElem& b);

RingElem operator+(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a);
RingElem operator*(const RingElem& a, const RingElem& b);
RingElem operator*(long long k, const RingElem& a);

RingElem conj(const RingElem& e);           // (x + Dy) - y*tau
long long norm(const RingElem& e);          // x^2 + Dxy + ((D^2-D)/4) y^2
long long trace(const RingElem& e);         // 2x + Dy
bool is_unit(const RingElem& e);

inline RingElem ring_zero(Disc d) { return RingElem(0, 0, d.value()); }
inline RingElem ring_one(Disc d) { return RingElem(1, 0, d.value()); }
inline RingElem ring_tau(Disc d) { return RingElem(0, 1, d.value()); }
// sqrt(D) = 2*tau - D as an element of A
inline RingElem ring_sqrt_d(Disc d) { return RingElem(-d.value(), 2, d.value()); }

// The unit group A^x: 6 elements for D=-3, 4 for D=-4, {+-1} otherwise.
std::vector<RingElem> units(Disc d);

// Nearest-lattice-point division, Euclidean D only: a = q*b + r, N(r) < N(b).
// Ties in the nearest point go to the smallest (x, then y) coordinate of q.
struct DivResult {
  RingElem q, r;
};
DivResult euclid_div(const RingElem& a, const RingElem& b);

// gcd up to units, normalized: among associates pick trace >= 0, then
// lexicographically smallest (x, y).
RingElem ring_gcd(RingElem a, RingElem b);
RingElem normalize_associate(const RingElem& g);

// Index [A : I] of the Z-module spanned by {a, tau*a, b, tau*b}.
long long module_norm(const RingElem& a, const RingElem& b);

std::complex<double> embed(const RingElem& e);
// tau = (D + i*sqrt(|D|))/2 as a complex number
std::complex<double> embed_tau(Disc d);

// nu = num / sqrt(D), an element of the dual lattice A^* = A/sqrt(D).
struct DualElem {
  RingElem num;
  DualElem() = default;
  explicit DualElem(RingElem n) : num(n) {}
  bool operator==(const DualElem& o) const { return num == o.num; }
};

// tr(nu * g) for g in A is the tau-coordinate of num*g: an exact integer.
long long dual_trace_with(const DualElem& nu, const RingElem& g);
// |D| * N(nu) = N(num) / |D| * |D|; N(nu) itself as an exact rational.
Rat dual_norm(const DualElem& nu);

}  // namespace hermtop
