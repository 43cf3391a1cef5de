#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace xcrs {

// Malformed input: dangling ids, tables defined off their domain, syntax.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of an operation does not hold (disconnected input,
// basepoint mismatch, regime mismatch, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation hit its configured bound (coset enumeration, search).
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string law;
  std::string witness;
};

// Outcome of a law/axiom checker. Structural problems are kept apart from
// law violations: a structurally broken object has no meaningful laws.
struct Report {
  std::vector<std::string> structural;
  std::vector<Violation>   violations;

  bool pass() const { return structural.empty() && violations.empty(); }
  bool structurally_ok() const { return structural.empty(); }

  void fail(std::string law, std::string witness) {
    violations.push_back({std::move(law), std::move(witness)});
  }
  void malformed(std::string what) { structural.push_back(std::move(what)); }
  void merge(Report const& other, std::string const& prefix = {});

  // Stops runaway reports on badly broken inputs.
  bool saturated() const { return violations.size() >= 64; }

  std::string to_string() const;
};

enum class CoverClass { covering, fibration_only, neither };
std::string to_string(CoverClass c);

}  // namespace xcrs
