#include "acx/pi_param.hpp"

#include <stdexcept>

namespace acx {

PiParam PiParam::rational_pi(mpq_class q) {
  q.canonicalize();
  if (sgn(q) == 0) throw std::invalid_argument("parameter a must be nonzero");
  return {Kind::RationalPi, std::move(q)};
}

PiParam PiParam::parse(std::string_view text) {
  if (text == "generic") return generic();
  constexpr std::string_view suffix = "pi";
  if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix)
    throw std::invalid_argument("expected 'q*pi' or 'generic', got '" + std::string(text) + "'");
  std::string_view head = text.substr(0, text.size() - suffix.size());
  if (head.empty() || head == "+") return rational_pi(1);
  if (head == "-") return rational_pi(-1);
  if (head.back() != '*')
    throw std::invalid_argument("expected 'q*pi' or 'generic', got '" + std::string(text) + "'");
  head.remove_suffix(1);
  return rational_pi(GaussRational::parse_rational(head));
}

Scalar PiParam::value() const {
  if (is_generic()) return Scalar::a();
  return Scalar(GaussRational(q_)) * Scalar::pi();
}

Scalar PiParam::specialize(const Scalar& s) const {
  if (is_generic()) return s;
  return s.substitute(Symbol::A, value());
}

std::string PiParam::to_string() const {
  if (is_generic()) return "generic";
  return q_.get_str() + "*pi";
}

}  // namespace acx
