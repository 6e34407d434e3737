#pragma once

#include <array>
#include <vector>

#include "hermtop/ring.hpp"

namespace hermtop {

// Column vector in A^2.
struct Vec2A {
  RingElem x, y;
  Vec2A() = default;
  Vec2A(RingElem x_, RingElem y_) : x(x_), y(y_) { require_same_disc(x, y); }
  bool operator==(const Vec2A& o) const { return x == o.x && y == o.y; }
  long long d() const { return x.d; }
};

inline Vec2A operator+(const Vec2A& a, const Vec2A& b) {
  return Vec2A(a.x + b.x, a.y + b.y);
}
inline Vec2A operator-(const Vec2A& a, const Vec2A& b) {
  return Vec2A(a.x - b.x, a.y - b.y);
}
inline Vec2A operator-(const Vec2A& a) { return Vec2A(-a.x, -a.y); }
inline Vec2A operator*(const RingElem& s, const Vec2A& a) {
  return Vec2A(s * a.x, s * a.y);
}

inline RingElem det(const Vec2A& a, const Vec2A& b) {
  return a.x * b.y - a.y * b.x;
}

// 2x2 matrix [[p, q], [r, s]] over A, acting on column vectors.
struct Mat2A {
  RingElem p, q, r, s;
  Mat2A() = default;
  Mat2A(RingElem p_, RingElem q_, RingElem r_, RingElem s_) : p(p_), q(q_), r(r_), s(s_) {}
  static Mat2A identity(Disc d) {
    return Mat2A(ring_one(d), ring_zero(d), ring_zero(d), ring_one(d));
  }
  static Mat2A from_columns(const Vec2A& c0, const Vec2A& c1) {
    return Mat2A(c0.x, c1.x, c0.y, c1.y);
  }
  RingElem det() const { return p * s - q * r; }
  bool in_gl2() const { return norm(det()) == 1; }
  bool operator==(const Mat2A& o) const {
    return p == o.p && q == o.q && r == o.r && s == o.s;
  }
  long long d() const { return p.d; }
};

inline Vec2A operator*(const Mat2A& m, const Vec2A& v) {
  return Vec2A(m.p * v.x + m.q * v.y, m.r * v.x + m.s * v.y);
}
inline Mat2A operator*(const Mat2A& a, const Mat2A& b) {
  return Mat2A(a.p * b.p + a.q * b.r, a.p * b.q + a.q * b.s,
               a.r * b.p + a.s * b.r, a.r * b.q + a.s * b.s);
}

// Inverse of a GL2(A) matrix: 1/det = conj(det) since N(det) = 1.
Mat2A gl2_inverse(const Mat2A& m);

// Unit-normalized representative of a lax vector (vector up to unit
// multiple): second coordinate gets trace >= 0, ties broken
// lexicographically; first coordinate decides when the second is 0.
Vec2A lax_canonical(const Vec2A& v);

// A vector is primitive when its coordinates generate the unit ideal.
bool is_primitive(const Vec2A& v);

// Order/compare helpers for canonical keys.
inline std::array<long long, 4> vec_key(const Vec2A& v) {
  return {v.x.x, v.x.y, v.y.x, v.y.y};
}

// Canonical representative of a matrix modulo left scalar units.
Mat2A mat_mod_units(const Mat2A& m);

}  // namespace hermtop
