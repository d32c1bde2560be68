#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crg {

using Witness = std::vector<std::size_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when an ambient tensor dimension or a brute-force sweep exceeds the
/// configured limits (see `Limits`).
class SizeLimit : public Error {
 public:
  using Error::Error;
};

class NonFiniteField : public Error {
 public:
  using Error::Error;
};

/// Outcome of an exhaustive axiom check. On failure `axiom` names the first
/// identity that failed and `witness` holds basis indices exhibiting it.
struct Verdict {
  bool ok = true;
  std::string axiom;
  Witness witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string axiom, Witness witness = {}) {
    return Verdict{false, std::move(axiom), std::move(witness)};
  }
  explicit operator bool() const { return ok; }
};

class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string object, Verdict v)
      : Error(describe(object, v)), object_(std::move(object)), verdict_(std::move(v)) {}

  const std::string& object() const { return object_; }
  const std::string& axiom() const { return verdict_.axiom; }
  const Witness& witness() const { return verdict_.witness; }
  const Verdict& verdict() const { return verdict_; }

 private:
  static std::string describe(const std::string& object, const Verdict& v) {
    std::string s = object + ": axiom '" + v.axiom + "' violated";
    if (!v.witness.empty()) {
      s += " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v.witness[i]);
      }
      s += ")";
    }
    return s;
  }

  std::string object_;
  Verdict verdict_;
};

class NotCoringMorphism : public AxiomViolation {
 public:
  using AxiomViolation::AxiomViolation;
};

class NotColinear : public AxiomViolation {
 public:
  using AxiomViolation::AxiomViolation;
};

class DualBasisInvalid : public AxiomViolation {
 public:
  using AxiomViolation::AxiomViolation;
};

class MiddleMismatch : public Error {
 public:
  using Error::Error;
};

/// The construction needs M ⊗_B D to embed into M ⊗_A C ⊗_B D; raised when
/// that fails on a concrete instance.
class PurityFailure : public Error {
 public:
  using Error::Error;
};

inline void require(const Verdict& v, const std::string& object) {
  if (!v.ok) throw AxiomViolation(object, v);
}

}  // namespace crg
