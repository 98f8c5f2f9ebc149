#pragma once

#include <memory>

#include "toda/polynomial.hpp"

namespace toda {

/// Plane curve z^2 + h(x) z - f(x) = 0.
///
/// Two shapes occur: the spectral curve of a Toda state (deg h = n,
/// leading coefficient -1, f a nonzero constant, genus n-1) and its
/// standard form y^2 = h0^2 + 4 f0 (h = 0, f of degree 2g+2).  f is kept
/// as a polynomial so both fit one model; spectral curves store it as a
/// constant.
template <class F>
struct CurveModel {
  enum class Kind { spectral, standard_form };

  Kind kind = Kind::spectral;
  Polynomial<F> h;
  Polynomial<F> f;
  int n = 0;      // lattice size for spectral curves, inherited otherwise
  int genus = 0;  // g = n - 1

  friend bool operator==(const CurveModel& a, const CurveModel& b) {
    return a.kind == b.kind && a.h == b.h && a.f == b.f && a.genus == b.genus;
  }
};

template <class F>
using CurvePtr = std::shared_ptr<const CurveModel<F>>;

template <class F>
bool same_curve(const CurvePtr<F>& a, const CurvePtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

/// Standard-form companion: y^2 = h^2 + 4f, genus unchanged.
template <class F>
CurvePtr<F> standard_form_curve(const CurveModel<F>& c) {
  auto out = std::make_shared<CurveModel<F>>();
  out->kind = CurveModel<F>::Kind::standard_form;
  out->h = Polynomial<F>();
  out->f = c.h * c.h + F(4) * c.f;
  out->n = c.n;
  out->genus = c.genus;
  return out;
}

}  // namespace toda
