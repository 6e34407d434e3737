#include "hermtop/ring.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hermtop {

namespace {

bool squarefree(long long n) {
  if (n < 0) n = -n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

Disc::Disc(long long d) : d_(d) {
  bool ok = false;
  if (d < 0) {
    long long m4 = ((d % 4) + 4) % 4;
    if (m4 == 1) {
      ok = squarefree(d);
    } else if (m4 == 0) {
      long long m = d / 4;
      long long mm = ((m % 4) + 4) % 4;
      ok = (mm == 2 || mm == 3) && squarefree(m);
    }
  }
  if (!ok) throw std::invalid_argument("not a negative fundamental discriminant: " + std::to_string(d));
}

void require_same_disc(const RingElem& a, const RingElem& b) {
  if (a.d != b.d) throw std::invalid_argument("mismatched discriminants");
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_disc(a, b);
  return RingElem(checked_ll(static_cast<__int128>(a.x) + b.x, "add"),
                  checked_ll(static_cast<__int128>(a.y) + b.y, "add"), a.d);
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  require_same_disc(a, b);
  return RingElem(checked_ll(static_cast<__int128>(a.x) - b.x, "sub"),
                  checked_ll(static_cast<__int128>(a.y) - b.y, "sub"), a.d);
}

RingElem operator-(const RingElem& a) { return RingElem(-a.x, -a.y, a.d); }

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_disc(a, b);
  // (x1 + y1 t)(x2 + y2 t) = x1x2 + (x1y2 + x2y1) t + y1y2 t^2,
  // t^2 = D t - C with C = (D^2 - D)/4.
  const long long D = a.d;
  const long long C = (D * D - D) / 4;
  __int128 yy = static_cast<__int128>(a.y) * b.y;
  __int128 x = static_cast<__int128>(a.x) * b.x - yy * C;
  __int128 y = static_cast<__int128>(a.x) * b.y + static_cast<__int128>(a.y) * b.x +
               yy * D;
  return RingElem(checked_ll(x, "mul"), checked_ll(y, "mul"), a.d);
}

RingElem operator*(long long k, const RingElem& a) {
  return RingElem(mul_ll(k, a.x), mul_ll(k, a.y), a.d);
}

RingElem conj(const RingElem& e) {
  return RingElem(checked_ll(static_cast<__int128>(e.x) + static_cast<__int128>(e.d) * e.y, "conj"),
                  -e.y, e.d);
}

long long norm(const RingElem& e) {
  const long long D = e.d;
  const long long C = (D * D - D) / 4;
  __int128 n = static_cast<__int128>(e.x) * e.x + static_cast<__int128>(D) * e.x * e.y +
               static_cast<__int128>(C) * e.y * e.y;
  return checked_ll(n, "norm");
}

long long trace(const RingElem& e) {
  return checked_ll(2 * static_cast<__int128>(e.x) + static_cast<__int128>(e.d) * e.y,
                    "trace");
}

bool is_unit(const RingElem& e) { return norm(e) == 1; }

std::vector<RingElem> units(Disc d) {
  const long long D = d.value();
  std::vector<RingElem> us;
  us.emplace_back(1, 0, D);
  us.emplace_back(-1, 0, D);
  if (D == -3) {
    // rho = 2 + tau, rho^2 = 1 + tau
    us.emplace_back(2, 1, D);
    us.emplace_back(-2, -1, D);
    us.emplace_back(1, 1, D);
    us.emplace_back(-1, -1, D);
  } else if (D == -4) {
    // i = 2 + tau
    us.emplace_back(2, 1, D);
    us.emplace_back(-2, -1, D);
  }
  return us;
}

DivResult euclid_div(const RingElem& a, const RingElem& b) {
  require_same_disc(a, b);
  Disc d(a.d);
  if (!d.euclidean())
    throw std::domain_error("euclid_div: discriminant is not norm-Euclidean");
  if (b.is_zero()) throw std::domain_error("euclid_div: division by zero");

  // a/b = a*conj(b)/N(b); search lattice points near the rational point.
  // In tau-coordinates the norm form is skewed, so for each candidate qy the
  // best qx is recentred at px + (D/2)(py - qy).
  RingElem w = a * conj(b);
  long long n = norm(b);
  long long D = a.d;
  long long qy0 = fdiv_ll(w.y, n);

  bool have = false;
  RingElem bestq(0, 0, a.d);
  long long bestn = 0;
  for (long long qy = qy0 - 2; qy <= qy0 + 2; ++qy) {
    long long qx0 = fdiv_ll(checked_ll(2 * static_cast<__int128>(w.x) +
                                           static_cast<__int128>(D) * (w.y - n * qy),
                                       "euclid_div"),
                            2 * n);
    for (long long qx = qx0 - 2; qx <= qx0 + 2; ++qx) {
      RingElem q(qx, qy, a.d);
      RingElem r = a - q * b;
      long long nr = norm(r);
      if (!have || nr < bestn ||
          (nr == bestn && (q.x < bestq.x || (q.x == bestq.x && q.y < bestq.y)))) {
        have = true;
        bestn = nr;
        bestq = q;
      }
    }
  }
  DivResult res{bestq, a - bestq * b};
  if (norm(res.r) >= n)
    throw std::logic_error("euclid_div: no remainder of smaller norm found");
  return res;
}

RingElem normalize_associate(const RingElem& g) {
  if (g.is_zero()) return g;
  RingElem best = g;
  bool have = false;
  for (const RingElem& u : units(Disc(g.d))) {
    RingElem cand = u * g;
    if (trace(cand) < 0) continue;
    if (!have || cand.x < best.x || (cand.x == best.x && cand.y < best.y)) {
      best = cand;
      have = true;
    }
  }
  return best;
}

RingElem ring_gcd(RingElem a, RingElem b) {
  require_same_disc(a, b);
  while (!b.is_zero()) {
    DivResult qr = euclid_div(a, b);
    a = b;
    b = qr.r;
  }
  return normalize_associate(a);
}

long long module_norm(const RingElem& a, const RingElem& b) {
  require_same_disc(a, b);
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("module_norm: both generators are zero");
  const long long D = a.d;
  const long long C = (D * D - D) / 4;
  // Z-module spanned by a, tau*a, b, tau*b; tau*(x+y tau) = -Cy + (x+Dy) tau.
  long long rows[4][2] = {
      {a.x, a.y},
      {mul_ll(-C, a.y), checked_ll(static_cast<__int128>(a.x) + static_cast<__int128>(D) * a.y, "mn")},
      {b.x, b.y},
      {mul_ll(-C, b.y), checked_ll(static_cast<__int128>(b.x) + static_cast<__int128>(D) * b.y, "mn")},
  };
  // Column-style Hermite reduction on 4x2 integer rows.
  // First clear column 0 to a single pivot by gcd elimination.
  auto reduce_col = [&](int col, int startrow) -> int {
    int pivot = -1;
    for (int i = startrow; i < 4; ++i) {
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return -1;
    std::swap(rows[startrow][0], rows[pivot][0]);
    std::swap(rows[startrow][1], rows[pivot][1]);
    pivot = startrow;
    for (int i = pivot + 1; i < 4; ++i) {
      while (rows[i][col] != 0) {
        long long q = rows[pivot][col] / rows[i][col];
        for (int j = 0; j < 2; ++j)
          rows[pivot][j] = checked_ll(
              static_cast<__int128>(rows[pivot][j]) - static_cast<__int128>(q) * rows[i][j],
              "hnf");
        std::swap(rows[pivot][0], rows[i][0]);
        std::swap(rows[pivot][1], rows[i][1]);
      }
    }
    return pivot;
  };
  int p0 = reduce_col(0, 0);
  int start1 = (p0 < 0) ? 0 : 1;
  int p1 = reduce_col(1, start1);
  if (p0 < 0 || p1 < 0) throw std::logic_error("module_norm: module has rank < 2");
  __int128 det = static_cast<__int128>(rows[0][0]) * rows[start1][1];
  long long idx = checked_ll(det < 0 ? -det : det, "module_norm");
  if (idx == 0) throw std::logic_error("module_norm: degenerate module");
  return idx;
}

std::complex<double> embed_tau(Disc d) {
  double D = static_cast<double>(d.value());
  return {D / 2.0, std::sqrt(-D) / 2.0};
}

std::complex<double> embed(const RingElem& e) {
  return static_cast<double>(e.x) + static_cast<double>(e.y) * embed_tau(Disc(e.d));
}

long long dual_trace_with(const DualElem& nu, const RingElem& g) {
  return (nu.num * g).y;
}

Rat dual_norm(const DualElem& nu) {
  return make_rat(norm(nu.num), -nu.num.d);
}

}  // namespace hermtop
