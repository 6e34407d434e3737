#include "hermtop/topograph.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace hermtop {

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_square(long long n) {
  if (n < 0) return false;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  for (long long s = std::max(0LL, r - 2); s <= r + 2; ++s)
    if (s * s == n) return true;
  return false;
}

struct Vec {
  BigInt x, y;
  Vec operator+(const Vec& o) const { return {x + o.x, y + o.y}; }
  Vec operator-() const { return {-x, -y}; }
};

BigInt eval(const QuadraticForm& f, const Vec& v) { return qeval_big(f, v.x, v.y); }

// lexicographic key of the lax class of v
std::pair<BigInt, BigInt> lax_key(const Vec& v) {
  BigInt m = v.x, n = v.y;
  if (m < 0 || (m == 0 && n < 0)) {
    m = -m;
    n = -n;
  }
  return {m, n};
}

bool same_lax(const Vec& p, const Vec& q) {
  return (p.x == q.x && p.y == q.y) || (p.x == -q.x && p.y == -q.y);
}

}  // namespace

LaxVec lax_normalize(BigInt m, BigInt n) {
  BigInt g = big_gcd(m, n);
  if (g > 1) {
    m /= g;
    n /= g;
  }
  if (m < 0 || (m == 0 && n < 0)) {
    m = -m;
    n = -n;
  }
  return LaxVec{m, n};
}

std::array<BigInt, 3> vertex_values(const QuadraticForm& f, const SuperBasis& sb) {
  return {qeval_big(f, sb.ux, sb.uy), qeval_big(f, sb.vx, sb.vy),
          qeval_big(f, sb.ux + sb.vx, sb.uy + sb.vy)};
}

BigInt vertex_disc(const BigInt& a, const BigInt& b, const BigInt& c) {
  return a * a + b * b + c * c - 2 * a * b - 2 * b * c - 2 * a * c;
}

SuperBasis edge_step(const SuperBasis& sb, EdgeChoice which) {
  switch (which) {
    case EdgeChoice::uv:  // third u+v -> u-v
      return SuperBasis{sb.ux, sb.uy, -sb.vx, -sb.vy};
    case EdgeChoice::uw:  // basis (u, u+v), third 2u+v; v replaced
      return SuperBasis{sb.ux, sb.uy, sb.ux + sb.vx, sb.uy + sb.vy};
    case EdgeChoice::vw:  // basis (v, u+v), third u+2v; u replaced
      return SuperBasis{sb.vx, sb.vy, sb.ux + sb.vx, sb.uy + sb.vy};
  }
  throw std::logic_error("edge_step: bad edge");
}

RiverResult trace_river(const QuadraticForm& f) {
  long long D = qdisc(f);
  if (D <= 0) throw std::domain_error("trace_river: form is not indefinite (D <= 0)");
  if (is_square(D)) throw std::domain_error("trace_river: form is isotropic (D is a square)");

  Vec u{1, 0}, v{0, 1};
  BigInt a = eval(f, u), b = eval(f, v), c = eval(f, u + v);
  if (a == 0 || b == 0 || c == 0)
    throw std::logic_error("trace_river: zero value on non-square discriminant");

  auto mixed = [](const BigInt& a_, const BigInt& b_, const BigInt& c_) {
    return !((a_ > 0 && b_ > 0 && c_ > 0) || (a_ < 0 && b_ < 0 && c_ < 0));
  };

  // Descent: at a same-sign vertex replace the region of largest |value|;
  // its new value is 2S - 3z < z in absolute value whenever D > 0.
  long long guard = 0;
  while (!mixed(a, b, c)) {
    if (++guard > 1000000) throw std::logic_error("trace_river: descent did not terminate");
    Vec w = u + v;
    struct Cand {
      int region;  // 0 = u, 1 = v, 2 = w
      BigInt absval;
      std::pair<BigInt, BigInt> key;
    };
    Cand cands[3] = {{0, abs(a), lax_key(u)}, {1, abs(b), lax_key(v)}, {2, abs(c), lax_key(w)}};
    int pick = 0;
    for (int i = 1; i < 3; ++i) {
      if (cands[i].absval > cands[pick].absval ||
          (cands[i].absval == cands[pick].absval && cands[i].key < cands[pick].key))
        pick = i;
    }
    BigInt S = a + b + c;
    if (pick == 2) {  // replace w: cross edge {u, v}
      v = -v;
      c = S + S - 3 * c;
    } else if (pick == 1) {  // replace v: cross edge {u, w}
      BigInt nv = S + S - 3 * b;
      v = w;
      b = c;
      c = nv;
    } else {  // replace u: cross edge {v, w}
      BigInt nu = S + S - 3 * a;
      u = v;
      a = b;
      v = w;
      b = c;
      c = nu;
    }
    if (a == 0 || b == 0 || c == 0)
      throw std::logic_error("trace_river: zero value on non-square discriminant");
  }

  // Pick a river edge {P, N} with f(P) > 0 > f(N) at the current vertex.
  Vec w = u + v;
  Vec P, N, third;
  BigInt fP, fN, f_third;
  if ((a > 0) != (b > 0)) {
    P = (a > 0) ? u : v;
    fP = (a > 0) ? a : b;
    N = (a > 0) ? v : u;
    fN = (a > 0) ? b : a;
    third = w;
    f_third = c;
  } else if ((a > 0) != (c > 0)) {
    P = (a > 0) ? u : w;
    fP = (a > 0) ? a : c;
    N = (a > 0) ? w : u;
    fN = (a > 0) ? c : a;
    third = v;
    f_third = b;
  } else {
    throw std::logic_error("trace_river: no river edge at mixed vertex");
  }
  // Orient the walk away from the current vertex: the far endpoint of the
  // edge must be the {P, N, P+N} superbasis.
  if (same_lax(third, P + N)) N = -N;

  RiverResult res;
  res.disc = D;
  BigInt best = abs(fP);
  Vec bestv = P;
  auto consider = [&](const BigInt& val, const Vec& vec) {
    if (abs(val) < best) {
      best = abs(val);
      bestv = vec;
    }
  };
  consider(fN, N);
  consider(f_third, third);

  struct State {
    BigInt fP, fN, fT;
    int detsign;
    bool operator<(const State& o) const {
      return std::tie(fP, fN, fT, detsign) < std::tie(o.fP, o.fN, o.fT, o.detsign);
    }
  };
  auto detsign = [](const Vec& p, const Vec& q) {
    return (p.x * q.y - p.y * q.x) > 0 ? 1 : -1;
  };

  std::map<State, std::pair<std::array<BigInt, 4>, size_t>> seen;
  long long guard2 = 0;
  Vec T = P + N;
  while (true) {
    if (++guard2 > 2000000) throw std::logic_error("trace_river: period not found");
    BigInt fT = eval(f, T);
    if (fT == 0) throw std::domain_error("trace_river: form is isotropic");
    State st{fP, fN, fT, detsign(P, N)};
    auto it = seen.find(st);
    if (it != seen.end()) {
      const auto& B0 = it->second.first;  // columns (P0 | N0), row-major
      BigInt d0 = B0[0] * B0[3] - B0[2] * B0[1];
      std::array<std::array<BigInt, 2>, 2> g;
      g[0][0] = (P.x * B0[3] - N.x * B0[2]) / d0;
      g[0][1] = (-P.x * B0[1] + N.x * B0[0]) / d0;
      g[1][0] = (P.y * B0[3] - N.y * B0[2]) / d0;
      g[1][1] = (-P.y * B0[1] + N.y * B0[0]) / d0;
      res.automorph = g;
      res.period.erase(res.period.begin(), res.period.begin() + it->second.second);
      res.min_abs = best;
      res.min_vec = lax_normalize(bestv.x, bestv.y);
      return res;
    }
    seen.emplace(st, std::make_pair(std::array<BigInt, 4>{P.x, N.x, P.y, N.y},
                                    res.period.size()));
    consider(fT, T);
    res.period.push_back(RiverEdgeLabel{fN, fP, fT > 0 ? 'R' : 'L'});
    if (fT > 0) {
      P = T;
      fP = fT;
    } else {
      N = T;
      fN = fT;
    }
    T = P + N;
  }
}

std::array<std::array<BigInt, 2>, 2> so_generator(const QuadraticForm& f) {
  return trace_river(f).automorph;
}

}  // namespace hermtop
