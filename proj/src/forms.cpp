#include "hermtop/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermtop {

long long qeval(const QuadraticForm& f, long long m, long long n) {
  __int128 v = static_cast<__int128>(f.a) * m * m + static_cast<__int128>(f.b2) * m * n +
               static_cast<__int128>(f.c) * n * n;
  return checked_ll(v, "qeval");
}

BigInt qeval_big(const QuadraticForm& f, const BigInt& m, const BigInt& n) {
  return BigInt(f.a) * m * m + BigInt(f.b2) * m * n + BigInt(f.c) * n * n;
}

long long heval(const HermitianForm& f, const RingElem& x, const RingElem& y) {
  require_same_disc(x, f.nu.num);
  require_same_disc(x, y);
  long long cross = dual_trace_with(f.nu, x * conj(y));
  __int128 v = static_cast<__int128>(f.a) * norm(x) + static_cast<__int128>(f.c) * norm(y) +
               cross;
  return checked_ll(v, "heval");
}

long long hdisc(const HermitianForm& f) {
  __int128 v = static_cast<__int128>(f.d()) * f.a * f.c + norm(f.nu.num);
  return checked_ll(v, "hdisc");
}

long long content(const HermitianForm& f) {
  long long g = gcd_ll(f.a, f.c);
  g = gcd_ll(g, f.nu.num.x);
  g = gcd_ll(g, f.nu.num.y);
  return g;
}

HermitianForm transform(const HermitianForm& f, const Mat2A& g) {
  if (!g.in_gl2()) throw std::domain_error("transform: determinant is not a unit");
  long long a2 = heval(f, g.p, g.r);
  long long c2 = heval(f, g.q, g.s);
  Disc d(f.d());
  RingElem sq = ring_sqrt_d(d);
  RingElem num2 = (f.a * (g.p * conj(g.q)) + f.c * (g.r * conj(g.s))) * sq +
                  f.nu.num * g.p * conj(g.s) - conj(f.nu.num) * g.r * conj(g.q);
  return HermitianForm(a2, c2, DualElem(num2));
}

namespace {

std::optional<RingElem> exact_div(const RingElem& a, const RingElem& g) {
  long long n = norm(g);
  if (n == 0) return std::nullopt;
  RingElem w = a * conj(g);
  if (w.x % n != 0 || w.y % n != 0) return std::nullopt;
  return RingElem(w.x / n, w.y / n, a.d);
}

}  // namespace

Cusp make_cusp(const Vec2A& v) {
  if (v.x.is_zero() && v.y.is_zero())
    throw std::domain_error("cusp: zero vector");
  Vec2A w = v;
  Disc d(v.d());
  if (d.euclidean()) {
    RingElem g = ring_gcd(w.x, w.y);
    if (!is_unit(g)) {
      auto qx = exact_div(w.x, g);
      auto qy = exact_div(w.y, g);
      w = Vec2A(*qx, *qy);
    }
  }
  w = lax_canonical(w);
  return Cusp{w, module_norm(w.x, w.y)};
}

Rat cusp_value(const HermitianForm& f, const Cusp& alpha) {
  return make_rat(heval(f, alpha.v), alpha.normN);
}

namespace {

long long modpow(long long base, long long exp, long long mod) {
  long long r = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = static_cast<long long>(static_cast<__int128>(r) * base % mod);
    base = static_cast<long long>(static_cast<__int128>(base) * base % mod);
    exp >>= 1;
  }
  return r;
}

// Legendre symbol (u/p) for odd prime p, p not dividing u.
int legendre(long long u, long long p) {
  long long r = modpow(u, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

}  // namespace

int hilbert_symbol_inf(long long a, long long b) {
  return (a < 0 && b < 0) ? -1 : 1;
}

int hilbert_symbol(long long a, long long b, long long p) {
  if (a == 0 || b == 0) throw std::domain_error("hilbert_symbol: zero argument");
  if (p < 2) throw std::domain_error("hilbert_symbol: invalid prime");
  long long alpha = 0, beta = 0;
  while (a % p == 0) { a /= p; ++alpha; }
  while (b % p == 0) { b /= p; ++beta; }
  if (p == 2) {
    auto eps = [](long long u) { return ((u - 1) / 2) & 1; };      // (u-1)/2 mod 2
    auto omega = [](long long u) {                                  // (u^2-1)/8 mod 2
      long long m = ((u % 8) + 8) % 8;
      return (m == 1 || m == 7) ? 0 : 1;
    };
    long long e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
    return (e & 1) ? -1 : 1;
  }
  int result = 1;
  if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) result = -result;
  if (beta & 1) result *= legendre(a, p);
  if (alpha & 1) result *= legendre(b, p);
  return result;
}

bool is_anisotropic(const HermitianForm& f) {
  long long delta = hdisc(f);
  if (delta == 0) throw std::domain_error("degenerate form (Delta = 0)");
  long long D = f.d();
  // ramification can only occur at p | 2 D Delta
  long long n = std::abs(2 * D * delta);
  std::vector<long long> primes;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  for (long long p : primes) {
    if (hilbert_symbol(D, delta, p) == -1) return true;
  }
  return false;
}

Rat rat_eval(const RatGram& g, const RingElem& x, const RingElem& y) {
  RingElem w = x * conj(y);
  // tr(nu w) = s tr(w) + t D w.y for nu = s + t sqrt(D)
  return g.a * Rat(norm(x)) + g.c * Rat(norm(y)) + g.s * Rat(trace(w)) +
         g.t * Rat(g.d) * Rat(w.y);
}

RatGram to_rat_gram(const HermitianForm& f) {
  // nu = num/sqrt(D) = ny/2 + (nx/D + ny/2) sqrt(D)
  RatGram g;
  g.d = f.d();
  g.a = Rat(f.a);
  g.c = Rat(f.c);
  g.s = make_rat(f.nu.num.y, 2);
  g.t = make_rat(f.nu.num.x, g.d) + make_rat(f.nu.num.y, 2);
  return g;
}

std::optional<HermitianForm> RatGram::to_integral() const {
  auto as_int = [](const Rat& r) -> std::optional<long long> {
    if (denominator(r) != 1) return std::nullopt;
    BigInt n = numerator(r);
    if (n > INT64_MAX || n < INT64_MIN) return std::nullopt;
    return static_cast<long long>(n);
  };
  auto ai = as_int(a), ci = as_int(c);
  // num = (D(t - s), 2s) in tau coordinates
  auto nx = as_int(Rat(d) * (t - s));
  auto ny = as_int(Rat(2) * s);
  if (!ai || !ci || !nx || !ny) return std::nullopt;
  return HermitianForm(*ai, *ci, DualElem(RingElem(*nx, *ny, d)));
}

RatGram reconstruct_form(const std::array<Cusp, 4>& pts, const std::array<Rat, 4>& vals) {
  long long D = pts[0].v.d();
  // Row i: [N(x), N(y), tr(x conj(y)), D * (x conj(y)).y] . (a, c, s, t) = f(x, y)
  Rat m[4][5];
  for (int i = 0; i < 4; ++i) {
    const Vec2A& v = pts[i].v;
    RingElem w = v.x * conj(v.y);
    m[i][0] = Rat(norm(v.x));
    m[i][1] = Rat(norm(v.y));
    m[i][2] = Rat(trace(w));
    m[i][3] = Rat(D) * Rat(w.y);
    m[i][4] = vals[i] * Rat(pts[i].normN);
  }
  // exact Gaussian elimination
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r) {
      if (m[r][col] != 0) { piv = r; break; }
    }
    if (piv < 0) throw std::domain_error("reconstruct_form: cusps concyclic or collinear");
    if (piv != col) std::swap_ranges(m[piv], m[piv] + 5, m[col]);
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[col][col];
      for (int cc = col; cc < 5; ++cc) m[r][cc] -= factor * m[col][cc];
    }
  }
  RatGram g;
  g.d = D;
  g.a = m[0][4] / m[0][0];
  g.c = m[1][4] / m[1][1];
  g.s = m[2][4] / m[2][2];
  g.t = m[3][4] / m[3][3];
  return g;
}

}  // namespace hermtop
