#include "xcrs/report.hpp"

#include <sstream>

namespace xcrs {

void Report::merge(Report const& other, std::string const& prefix) {
  for (auto const& s : other.structural) {
    structural.push_back(prefix + s);
  }
  for (auto const& v : other.violations) {
    violations.push_back({prefix + v.law, v.witness});
  }
}

std::string Report::to_string() const {
  std::ostringstream out;
  for (auto const& s : structural) {
    out << "structural: " << s << '\n';
  }
  for (auto const& v : violations) {
    out << "violation: " << v.law << ": " << v.witness << '\n';
  }
  if (pass()) {
    out << "pass\n";
  }
  return out.str();
}

std::string to_string(CoverClass c) {
  switch (c) {
    case CoverClass::covering:
      return "covering";
    case CoverClass::fibration_only:
      return "fibration_only";
    case CoverClass::neither:
      return "neither";
  }
  return "?";
}

}  // namespace xcrs
