#pragma once

#include <string>
#include <variant>

#include "toda/rational.hpp"
#include "toda/rational_function.hpp"

namespace toda {

enum class FieldTag { Q, QT };

inline std::string field_name(FieldTag t) { return t == FieldTag::Q ? "Q" : "Q(T)"; }

template <class F>
struct FieldInfo;

template <>
struct FieldInfo<BigRational> {
  static constexpr FieldTag tag = FieldTag::Q;
};

template <>
struct FieldInfo<RationalFunction> {
  static constexpr FieldTag tag = FieldTag::QT;
};

/// Runtime-tagged scalar: either an element of Q or of Q(T).  This is the
/// boundary representation used by the JSON layer and the CLI; the
/// computational core is typed on the concrete field, so tag mixing is
/// impossible there by construction.  Here it is checked per operation.
class FieldScalar {
 public:
  FieldScalar() : v_(BigRational(0)) {}
  FieldScalar(BigRational q) : v_(std::move(q)) {}            // NOLINT
  FieldScalar(RationalFunction r) : v_(std::move(r)) {}       // NOLINT

  FieldTag tag() const {
    return std::holds_alternative<BigRational>(v_) ? FieldTag::Q : FieldTag::QT;
  }

  static FieldScalar zero(FieldTag t) {
    return t == FieldTag::Q ? FieldScalar(BigRational(0))
                            : FieldScalar(RationalFunction(0));
  }
  static FieldScalar one(FieldTag t) {
    return t == FieldTag::Q ? FieldScalar(BigRational(1))
                            : FieldScalar(RationalFunction(1));
  }

  const BigRational& rational() const {
    if (tag() != FieldTag::Q) throw FieldMismatch("expected a Q scalar");
    return std::get<BigRational>(v_);
  }
  const RationalFunction& rational_function() const {
    if (tag() != FieldTag::QT) throw FieldMismatch("expected a Q(T) scalar");
    return std::get<RationalFunction>(v_);
  }

  bool is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
  }

  friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x + y; });
  }
  friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x - y; });
  }
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x * y; });
  }
  friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x / y; });
  }

  friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
    if (a.tag() != b.tag()) return false;
    if (a.tag() == FieldTag::Q) return a.rational() == b.rational();
    return a.rational_function() == b.rational_function();
  }

 private:
  template <class Op>
  static FieldScalar apply(const FieldScalar& a, const FieldScalar& b, Op op) {
    if (a.tag() != b.tag())
      throw FieldMismatch("cannot mix " + field_name(a.tag()) + " and " +
                          field_name(b.tag()) + " scalars in one computation");
    if (a.tag() == FieldTag::Q) return FieldScalar(op(a.rational(), b.rational()));
    return FieldScalar(op(a.rational_function(), b.rational_function()));
  }

  std::variant<BigRational, RationalFunction> v_;
};

}  // namespace toda
