#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "toda/curve.hpp"
#include "toda/field.hpp"
#include "toda/mumford.hpp"
#include "toda/toda_flow.hpp"
#include "toda/tropical.hpp"

namespace toda {

// ordered_json keeps object keys in insertion order, which is what makes
// trace files byte-identical under replay.
using Json = nlohmann::ordered_json;

// -- scalars ---------------------------------------------------------------
// BigRational encodes as the string "p/q" (or "p" when q = 1);
// RationalFunction as {"num": [...], "den": [...]} with ascending
// coefficient arrays.

inline Json encode(const BigRational& r) { return r.str(); }

BigRational decode_rational(const Json& j);

inline Json encode(const RationalFunction& r) {
  Json num = Json::array(), den = Json::array();
  for (const auto& c : r.num().coeffs()) num.push_back(encode(c));
  for (const auto& c : r.den().coeffs()) den.push_back(encode(c));
  return Json{{"num", std::move(num)}, {"den", std::move(den)}};
}

RationalFunction decode_rational_function(const Json& j);

template <class F>
F decode_scalar(const Json& j);

template <>
inline BigRational decode_scalar<BigRational>(const Json& j) {
  return decode_rational(j);
}
template <>
inline RationalFunction decode_scalar<RationalFunction>(const Json& j) {
  return decode_rational_function(j);
}

inline Json encode(const FieldScalar& s) {
  return s.tag() == FieldTag::Q ? encode(s.rational())
                                : encode(s.rational_function());
}

// -- polynomials: array of scalar encodings, ascending in degree -----------

template <class F>
Json encode(const Polynomial<F>& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(encode(c));
  return arr;
}

template <class F>
Polynomial<F> decode_poly(const Json& j) {
  if (!j.is_array()) throw BadInput("polynomial must be a JSON array");
  std::vector<F> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(decode_scalar<F>(c));
  return Polynomial<F>::from_coeffs(std::move(coeffs));
}

// -- states, curves, divisors ----------------------------------------------

template <class F>
Json encode(const TodaState<F>& s) {
  Json I = Json::array(), V = Json::array();
  for (const auto& x : s.I) I.push_back(encode(x));
  for (const auto& x : s.V) V.push_back(encode(x));
  return Json{{"field", field_name(FieldInfo<F>::tag)},
              {"n", s.n},
              {"I", std::move(I)},
              {"V", std::move(V)}};
}

using AnyTodaState =
    std::variant<TodaState<BigRational>, TodaState<RationalFunction>>;

AnyTodaState decode_state(const Json& j);

template <class F>
Json encode(const CurveModel<F>& c) {
  if (c.kind == CurveModel<F>::Kind::spectral)
    return Json{{"h", encode(c.h)},
                {"f", encode(c.f.coeff(0))},
                {"n", c.n}};
  return Json{{"h", encode(c.h)}, {"F", encode(c.f)}, {"genus", c.genus}};
}

template <class F>
CurvePtr<F> decode_curve(const Json& j) {
  auto c = std::make_shared<CurveModel<F>>();
  c->h = decode_poly<F>(j.at("h"));
  if (j.contains("F")) {
    c->kind = CurveModel<F>::Kind::standard_form;
    c->f = decode_poly<F>(j.at("F"));
    c->genus = j.at("genus").get<int>();
    c->n = c->genus + 1;
  } else {
    c->kind = CurveModel<F>::Kind::spectral;
    c->f = Polynomial<F>(decode_scalar<F>(j.at("f")));
    c->n = j.at("n").get<int>();
    c->genus = c->n - 1;
  }
  return c;
}

template <class F>
Json encode(const MumfordDivisor<F>& e) {
  return Json{{"P", encode(e.P)}, {"Q", encode(e.Q)}, {"d", e.d}};
}

template <class F>
MumfordDivisor<F> decode_divisor(const Json& j, CurvePtr<F> curve) {
  return MumfordDivisor<F>{std::move(curve), decode_poly<F>(j.at("P")),
                           decode_poly<F>(j.at("Q")), j.at("d").get<int>()};
}

inline Json encode(const bbs::TropicalState& s) {
  return Json{{"n", s.n()}, {"Q", s.Q}, {"W", s.W}};
}

bbs::TropicalState decode_tropical(const Json& j);

inline Json encode(const bbs::BoxBallState& s) { return s.str(); }

}  // namespace toda
