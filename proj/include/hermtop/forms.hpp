#pragma once

#include <array>
#include <optional>

#include "hermtop/lattice.hpp"
#include "hermtop/numeric.hpp"

namespace hermtop {

// a x^2 + b2 xy + c y^2 with b2 = 2h; integral on Z^2 for any integer b2.
struct QuadraticForm {
  long long a = 0, b2 = 0, c = 0;
};

long long qeval(const QuadraticForm& f, long long m, long long n);
BigInt qeval_big(const QuadraticForm& f, const BigInt& m, const BigInt& n);
inline long long qdisc(const QuadraticForm& f) {
  return checked_ll(static_cast<__int128>(f.b2) * f.b2 - 4 * static_cast<__int128>(f.a) * f.c,
                    "qdisc");
}

// Integral binary hermitian form with Gram matrix (a, nu; conj(nu), c),
// nu = num/sqrt(D) in the dual lattice A^*.
struct HermitianForm {
  long long a = 0, c = 0;
  DualElem nu;
  HermitianForm() = default;
  HermitianForm(long long a_, long long c_, DualElem nu_) : a(a_), c(c_), nu(nu_) {}
  long long d() const { return nu.num.d; }
  bool operator==(const HermitianForm& o) const {
    return a == o.a && c == o.c && nu == o.nu;
  }
};

// a N(x) + c N(y) + tr(nu x conj(y)); exact integer.
long long heval(const HermitianForm& f, const RingElem& x, const RingElem& y);
inline long long heval(const HermitianForm& f, const Vec2A& v) {
  return heval(f, v.x, v.y);
}

// Delta = D(ac - N(nu)) = D*a*c + N(num).
long long hdisc(const HermitianForm& f);

// gcd of the values of f; 1 means primitive.
long long content(const HermitianForm& f);

// Pullback by g: transform(f, g)(v) = f(g v).  Requires det(g) a unit;
// preserves the discriminant.
HermitianForm transform(const HermitianForm& f, const Mat2A& g);

// Cusp a/b in P^1(k) with the norm of the ideal (a, b) cached.  For
// Euclidean D the representative is made primitive; always unit-normalized.
struct Cusp {
  Vec2A v;
  long long normN = 1;
  bool is_infinity() const { return v.y.is_zero(); }
};

Cusp make_cusp(const Vec2A& v);
inline Cusp cusp_infinity(Disc d) {
  return make_cusp(Vec2A(ring_one(d), ring_zero(d)));
}
inline Cusp cusp_zero(Disc d) {
  return make_cusp(Vec2A(ring_zero(d), ring_one(d)));
}

// F(alpha) = f(a, b)/N(I); independent of the generating pair.
Rat cusp_value(const HermitianForm& f, const Cusp& alpha);

// Hilbert symbol (a, b)_p for p prime; hilbert_symbol_inf for the real place.
int hilbert_symbol(long long a, long long b, long long p);
int hilbert_symbol_inf(long long a, long long b);

// f anisotropic iff (D, Delta)_p = -1 for some p | 2 D Delta.
bool is_anisotropic(const HermitianForm& f);
inline bool is_indefinite(const HermitianForm& f) {
  long long delta = hdisc(f);
  if (delta == 0) throw std::domain_error("degenerate form (Delta = 0)");
  return delta > 0;
}

// Rational Gram data (a, c, nu = s + t*sqrt(D)); the output type of
// reconstruction, where integrality is checked separately.
struct RatGram {
  Rat a, c, s, t;
  long long d = 0;
  std::optional<HermitianForm> to_integral() const;
};

Rat rat_eval(const RatGram& g, const RingElem& x, const RingElem& y);
RatGram to_rat_gram(const HermitianForm& f);

// Unique hermitian form with the given F-values at four cusps; the cusps
// must not be concyclic/collinear in P^1(C).
RatGram reconstruct_form(const std::array<Cusp, 4>& pts, const std::array<Rat, 4>& vals);

}  // namespace hermtop
