#include "toda/json_codec.hpp"

namespace toda {

BigRational decode_rational(const Json& j) {
  if (j.is_string()) return BigRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(j.get<long>());
  throw BadInput("rational scalar must be a string like \"p/q\"");
}

RationalFunction decode_rational_function(const Json& j) {
  // Plain rationals embed as constants, so hand-written Q(T) inputs can
  // write "3/2" instead of {"num":["3/2"],"den":["1"]}.
  if (j.is_string() || j.is_number_integer())
    return RationalFunction(decode_rational(j));
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw BadInput("Q(T) scalar must be {\"num\": [...], \"den\": [...]}");
  return RationalFunction(decode_poly<BigRational>(j.at("num")),
                          decode_poly<BigRational>(j.at("den")));
}

namespace {

template <class F>
TodaState<F> decode_state_typed(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<F> I, V;
  for (const auto& x : j.at("I")) I.push_back(decode_scalar<F>(x));
  for (const auto& x : j.at("V")) V.push_back(decode_scalar<F>(x));
  if (static_cast<int>(I.size()) != n || static_cast<int>(V.size()) != n)
    throw BadInput("state arrays disagree with n");
  return TodaState<F>(std::move(I), std::move(V));
}

}  // namespace

AnyTodaState decode_state(const Json& j) {
  const std::string field = j.at("field").get<std::string>();
  if (field == "Q") return decode_state_typed<BigRational>(j);
  if (field == "Q(T)" || field == "QT")
    return decode_state_typed<RationalFunction>(j);
  throw BadInput("field must be \"Q\" or \"Q(T)\"");
}

bbs::TropicalState decode_tropical(const Json& j) {
  std::vector<std::int64_t> Q = j.at("Q").get<std::vector<std::int64_t>>();
  std::vector<std::int64_t> W = j.at("W").get<std::vector<std::int64_t>>();
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(Q.size()))
    throw BadInput("tropical state arrays disagree with n");
  return bbs::TropicalState(std::move(Q), std::move(W));
}

}  // namespace toda
