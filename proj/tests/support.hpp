#pragma once

#include <ostream>

#include "acx/form.hpp"
#include "acx/scalar.hpp"

namespace acx {

inline std::ostream& operator<<(std::ostream& os, const Form& f) { return os << f.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace acx
