#pragma once

/**
 * Real quaternions q0 + q1 i + q2 j + q3 k and biquaternions (the same algebra
 * with complex coefficients, where the complex unit is central and commutes
 * with i, j, k).
 *
 * Multiplication table: i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
 */

#include <array>
#include <complex>
#include <cstddef>

namespace qriesz {

using Complex = std::complex<double>;

struct Quaternion {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a, double b, double c, double d) : q0{a}, q1{b}, q2{c}, q3{d} {}

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr double scalar() const { return q0; }
  constexpr Quaternion vec() const { return {0, q1, q2, q3}; }
  constexpr bool is_pure() const { return q0 == 0.0; }

  constexpr Quaternion operator+(const Quaternion& o) const {
    return {q0 + o.q0, q1 + o.q1, q2 + o.q2, q3 + o.q3};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {q0 - o.q0, q1 - o.q1, q2 - o.q2, q3 - o.q3};
  }
  constexpr Quaternion operator-() const { return {-q0, -q1, -q2, -q3}; }
  constexpr Quaternion operator*(double s) const { return {q0 * s, q1 * s, q2 * s, q3 * s}; }
  constexpr Quaternion operator/(double s) const { return {q0 / s, q1 / s, q2 / s, q3 / s}; }

  // Hamilton product.
  constexpr Quaternion operator*(const Quaternion& o) const {
    return {q0 * o.q0 - q1 * o.q1 - q2 * o.q2 - q3 * o.q3,
            q0 * o.q1 + q1 * o.q0 + q2 * o.q3 - q3 * o.q2,
            q0 * o.q2 - q1 * o.q3 + q2 * o.q0 + q3 * o.q1,
            q0 * o.q3 + q1 * o.q2 - q2 * o.q1 + q3 * o.q0};
  }

  constexpr double norm_sq() const { return q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3; }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }
constexpr Quaternion qconj(const Quaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }
double qnorm(const Quaternion& q);

/// Multiplicative inverse conj(q)/|q|^2. Throws DomainError for q == 0.
Quaternion qinv(const Quaternion& q);

/**
 * Pure unit quaternion u1 i + u2 j + u3 k with u1^2 + u2^2 + u3^2 = 1.
 *
 * Construction checks the unit norm to a relative tolerance of 1e-9 and never
 * renormalizes; use normalized() to build an axis from an arbitrary nonzero
 * 3-vector.
 */
class PureUnitQuaternion {
 public:
  static constexpr double kUnitTolerance = 1e-9;

  PureUnitQuaternion(double u1, double u2, double u3);
  static PureUnitQuaternion normalized(double x, double y, double z);

  static PureUnitQuaternion i() { return {1, 0, 0}; }
  static PureUnitQuaternion j() { return {0, 1, 0}; }
  static PureUnitQuaternion k() { return {0, 0, 1}; }

  double u1() const { return u_[0]; }
  double u2() const { return u_[1]; }
  double u3() const { return u_[2]; }
  std::array<double, 3> components() const { return u_; }

  Quaternion as_quaternion() const { return {0, u_[0], u_[1], u_[2]}; }
  // u^{-1} = -u
  PureUnitQuaternion inverse() const { return {-u_[0], -u_[1], -u_[2]}; }

  bool operator==(const PureUnitQuaternion&) const = default;

 private:
  std::array<double, 3> u_;
};

/// e^{u phi} = cos(phi) + u sin(phi).
Quaternion qexp_pure(const PureUnitQuaternion& u, double phi);

/**
 * q x conj(q) for unit q and pure x: rotation of x by 2*phi in the plane
 * orthogonal to u when q = e^{u phi}. Throws DomainError if |q| deviates from 1
 * by more than 1e-9 or x has a scalar part.
 */
Quaternion rotate3(const Quaternion& q, const Quaternion& x);

struct Biquaternion {
  std::array<Complex, 4> c{};

  constexpr Biquaternion() = default;
  constexpr Biquaternion(Complex c0, Complex c1, Complex c2, Complex c3) : c{c0, c1, c2, c3} {}
  constexpr Biquaternion(const Quaternion& q)  // NOLINT(google-explicit-constructor)
      : c{Complex(q.q0), Complex(q.q1), Complex(q.q2), Complex(q.q3)} {}

  static constexpr Biquaternion scalar_value(Complex s) { return {s, 0.0, 0.0, 0.0}; }

  bool operator==(const Biquaternion&) const = default;

  Complex scalar() const { return c[0]; }
  Biquaternion vec() const { return {0.0, c[1], c[2], c[3]}; }
  Quaternion real() const { return {c[0].real(), c[1].real(), c[2].real(), c[3].real()}; }
  Quaternion imag() const { return {c[0].imag(), c[1].imag(), c[2].imag(), c[3].imag()}; }

  Biquaternion operator+(const Biquaternion& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
  }
  Biquaternion operator-(const Biquaternion& o) const {
    return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
  }
  Biquaternion operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
  Biquaternion& operator+=(const Biquaternion& o) {
    for (std::size_t n = 0; n < 4; ++n) c[n] += o.c[n];
    return *this;
  }
  Biquaternion operator*(Complex s) const { return {c[0] * s, c[1] * s, c[2] * s, c[3] * s}; }

  Biquaternion operator*(const Biquaternion& o) const {
    const auto& a = c;
    const auto& b = o.c;
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  }

  // Sum of |c_n|^2; the squared length in C^4.
  double norm_sq() const { return std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]) + std::norm(c[3]); }
};

inline Biquaternion operator*(Complex s, const Biquaternion& q) { return q * s; }

// Conjugates the complex coefficients only; a ring automorphism.
inline Biquaternion conj_c(const Biquaternion& q) {
  return {std::conj(q.c[0]), std::conj(q.c[1]), std::conj(q.c[2]), std::conj(q.c[3])};
}
// Quaternionic conjugation only.
inline Biquaternion conj_h(const Biquaternion& q) { return {q.c[0], -q.c[1], -q.c[2], -q.c[3]}; }
// Complex and quaternionic conjugation; conj_ch(pq) = conj_ch(q) conj_ch(p).
inline Biquaternion conj_ch(const Biquaternion& q) { return conj_c(conj_h(q)); }

// Sc(conj_ch(p) q) = sum_n conj(p_n) q_n.
inline Complex scalar_inner(const Biquaternion& p, const Biquaternion& q) {
  return std::conj(p.c[0]) * q.c[0] + std::conj(p.c[1]) * q.c[1] + std::conj(p.c[2]) * q.c[2] +
         std::conj(p.c[3]) * q.c[3];
}

// R(q) f = f q and L(q) f = q f.
inline Biquaternion right_mul(const Quaternion& q, const Biquaternion& f) { return f * Biquaternion(q); }
inline Biquaternion left_mul(const Quaternion& q, const Biquaternion& f) { return Biquaternion(q) * f; }

}  // namespace qriesz
