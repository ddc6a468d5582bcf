#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "dcpell/rings.hpp"

namespace dcpell {

// The five conjugations of a dual-complex number.
enum class ConjKind {
  C1,  // complex:      i -> -i
  C2,  // dual:         eps -> -eps
  C3,  // coupled:      both (C1 composed with C2)
  C4,  // dual-complex: conj(z1) * (1 - eps z2/z1), needs invertible z1
  C5,  // anti-dual:    z2 - eps z1; squares to negation
};

// Commutative four-component algebra on the basis {1, i, eps, i*eps} with
// i^2 = -1, eps != 0, eps^2 = (i*eps)^2 = eps*(i*eps) = 0, over an exact
// coefficient ring R. Writing w = z1 + eps z2 with complex halves
// z1 = (re, im), z2 = (du, imdu), the product is z1*z3 + eps(z1*z4 + z2*z3).
// A commutative ring with zero divisors: the pure-dual elements square to 0.
template <typename R>
struct DualComplex {
  R re{};    // coefficient of 1
  R im{};    // coefficient of i
  R du{};    // coefficient of eps
  R imdu{};  // coefficient of i*eps

  DualComplex() = default;
  DualComplex(R re_, R im_, R du_, R imdu_)
      : re(std::move(re_)), im(std::move(im_)), du(std::move(du_)), imdu(std::move(imdu_)) {}
  explicit DualComplex(R scalar) : re(std::move(scalar)) {}

  static DualComplex zero() { return {}; }
  static DualComplex one() { return DualComplex(R(1)); }
  static DualComplex unit_i() { return {R(0), R(1), R(0), R(0)}; }
  static DualComplex unit_eps() { return {R(0), R(0), R(1), R(0)}; }
  static DualComplex unit_ieps() { return {R(0), R(0), R(0), R(1)}; }

  bool is_zero() const { return re == R(0) && im == R(0) && du == R(0) && imdu == R(0); }

  friend DualComplex operator+(const DualComplex& x, const DualComplex& y) {
    return {x.re + y.re, x.im + y.im, x.du + y.du, x.imdu + y.imdu};
  }
  friend DualComplex operator-(const DualComplex& x, const DualComplex& y) {
    return {x.re - y.re, x.im - y.im, x.du - y.du, x.imdu - y.imdu};
  }
  friend DualComplex operator-(const DualComplex& x) {
    return {-x.re, -x.im, -x.du, -x.imdu};
  }
  friend DualComplex operator*(const DualComplex& x, const DualComplex& y) {
    return {x.re * y.re - x.im * y.im,
            x.re * y.im + x.im * y.re,
            x.re * y.du - x.im * y.imdu + x.du * y.re - x.imdu * y.im,
            x.re * y.imdu + x.im * y.du + x.du * y.im + x.imdu * y.re};
  }
  friend DualComplex operator*(const DualComplex& x, const R& s) {
    return {x.re * s, x.im * s, x.du * s, x.imdu * s};
  }
  friend DualComplex operator*(const R& s, const DualComplex& x) { return x * s; }
  friend bool operator==(const DualComplex& x, const DualComplex& y) {
    return x.re == y.re && x.im == y.im && x.du == y.du && x.imdu == y.imdu;
  }
  friend bool operator!=(const DualComplex& x, const DualComplex& y) { return !(x == y); }
};

namespace detail {

// conj(z1)^2 * z2 / |z1|^2, the dual half of the *4 conjugate.
template <typename R>
std::pair<R, R> conj4_dual_half(const DualComplex<R>& w, const R& nrm) {
  R ta = w.re * w.re - w.im * w.im;
  R tb = R(-2) * w.re * w.im;
  R ua = ta * w.du - tb * w.imdu;
  R ub = ta * w.imdu + tb * w.du;
  return {ua / nrm, ub / nrm};
}

}  // namespace detail

// C1..C3 flip signs, C5 swaps the halves with a sign, all valid over any
// ring. C4 is conj(z1)*(1 - eps z2/z1) and needs exact division plus a
// nonzero complex part.
template <typename R>
DualComplex<R> dc_conj(const DualComplex<R>& w, ConjKind kind) {
  switch (kind) {
    case ConjKind::C1: return {w.re, -w.im, w.du, -w.imdu};
    case ConjKind::C2: return {w.re, w.im, -w.du, -w.imdu};
    case ConjKind::C3: return {w.re, -w.im, -w.du, w.imdu};
    case ConjKind::C5: return {w.du, w.imdu, -w.re, -w.im};
    case ConjKind::C4:
      if constexpr (is_field_v<R>) {
        R nrm = w.re * w.re + w.im * w.im;
        if (nrm == R(0)) throw std::domain_error("dc_conj: *4 of a non-invertible complex part");
        auto [da, db] = detail::conj4_dual_half(w, nrm);
        return {w.re, -w.im, -da, -db};
      } else {
        throw std::domain_error("dc_conj: *4 requires a coefficient ring with exact division");
      }
  }
  throw std::invalid_argument("dc_conj: bad kind");
}

// w1 / w2 = z1/z3 + eps (z2 z3 - z1 z4) / z3^2. Defined whenever the complex
// part z3 of the divisor is nonzero; pure-dual divisors are zero divisors.
template <typename R>
DualComplex<R> dc_div(const DualComplex<R>& w1, const DualComplex<R>& w2) {
  static_assert(is_field_v<R>, "dc_div requires a field coefficient ring");
  R nrm = w2.re * w2.re + w2.im * w2.im;  // |z3|^2
  if (nrm == R(0)) throw std::domain_error("dc_div: divisor has zero complex part");
  R qa = (w1.re * w2.re + w1.im * w2.im) / nrm;
  R qb = (w1.im * w2.re - w1.re * w2.im) / nrm;
  // u = z2 z3 - z1 z4
  R ua = (w1.du * w2.re - w1.imdu * w2.im) - (w1.re * w2.du - w1.im * w2.imdu);
  R ub = (w1.du * w2.im + w1.imdu * w2.re) - (w1.re * w2.imdu + w1.im * w2.du);
  // u / z3^2, with z3^2 = (c, d) and |z3^2| = nrm^2
  R c = w2.re * w2.re - w2.im * w2.im;
  R d = R(2) * w2.re * w2.im;
  R nrm2 = nrm * nrm;
  return {qa, qb, (ua * c + ub * d) / nrm2, (ub * c - ua * d) / nrm2};
}

// The exact radicand w * conj(w, kind). The square root the notation N
// suggests is not generally well-defined on this ring, so the square is the
// exposed quantity.
template <typename R>
DualComplex<R> dc_norm_sq(const DualComplex<R>& w, ConjKind kind) {
  return w * dc_conj(w, kind);
}

// Canonical text form "a + b*i + c*eps + d*i*eps" with exact coefficients.
template <typename R>
std::string to_string(const DualComplex<R>& w) {
  return coeff_str(w.re) + " + " + coeff_str(w.im) + "*i + " + coeff_str(w.du) + "*eps + " +
         coeff_str(w.imdu) + "*i*eps";
}

}  // namespace dcpell
