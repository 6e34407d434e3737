#include "hermtop/lattice.hpp"

#include <stdexcept>
#include <tuple>

namespace hermtop {

Mat2A gl2_inverse(const Mat2A& m) {
  RingElem dt = m.det();
  if (norm(dt) != 1) throw std::domain_error("gl2_inverse: determinant is not a unit");
  RingElem di = conj(dt);  // 1/det since N(det) = 1
  return Mat2A(di * m.s, di * (-m.q), di * (-m.r), di * m.p);
}

Vec2A lax_canonical(const Vec2A& v) {
  if (v.x.is_zero() && v.y.is_zero()) return v;
  bool use_y = !v.y.is_zero();
  bool have = false;
  Vec2A best = v;
  auto key = [&](const Vec2A& c) {
    const RingElem& lead = use_y ? c.y : c.x;
    return std::make_tuple(lead.x, lead.y, c.x.x, c.x.y, c.y.x, c.y.y);
  };
  for (const RingElem& u : units(Disc(v.d()))) {
    Vec2A cand = u * v;
    const RingElem& lead = use_y ? cand.y : cand.x;
    if (trace(lead) < 0) continue;
    if (!have || key(cand) < key(best)) {
      best = cand;
      have = true;
    }
  }
  return best;
}

bool is_primitive(const Vec2A& v) {
  if (v.x.is_zero() && v.y.is_zero()) return false;
  return module_norm(v.x, v.y) == 1;
}

Mat2A mat_mod_units(const Mat2A& m) {
  auto key = [](const Mat2A& c) {
    return std::make_tuple(c.p.x, c.p.y, c.q.x, c.q.y, c.r.x, c.r.y, c.s.x, c.s.y);
  };
  Mat2A best = m;
  for (const RingElem& u : units(Disc(m.d()))) {
    Mat2A cand(u * m.p, u * m.q, u * m.r, u * m.s);
    if (key(cand) < key(best)) best = cand;
  }
  return best;
}

}  // namespace hermtop
