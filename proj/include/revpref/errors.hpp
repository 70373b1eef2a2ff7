#ifndef REVPREF_ERRORS_HPP
#define REVPREF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace revpref {

/// Malformed input (CSV schema, dimension mismatch, invalid values).
class InputError : public std::runtime_error {
 public:
  InputError(std::string msg, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(std::move(msg)), line(line), column(column) {}
  std::size_t line, column;
};

/// An operation's axiom precondition failed; carries the violating
/// pair or cycle of observation indices.
class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(std::string axiom, std::vector<std::size_t> witness)
      : std::runtime_error(axiom + " violated"),
        axiom(std::move(axiom)),
        witness(std::move(witness)) {}
  std::string axiom;
  std::vector<std::size_t> witness;
};

class GarpViolation : public AxiomViolation {
 public:
  explicit GarpViolation(std::vector<std::size_t> w) : AxiomViolation("GARP", std::move(w)) {}
};

class SarpViolation : public AxiomViolation {
 public:
  explicit SarpViolation(std::vector<std::size_t> w) : AxiomViolation("SARP", std::move(w)) {}
};

class WgarpViolation : public AxiomViolation {
 public:
  explicit WgarpViolation(std::vector<std::size_t> w) : AxiomViolation("WGARP", std::move(w)) {}
};

class WarpViolation : public AxiomViolation {
 public:
  explicit WarpViolation(std::vector<std::size_t> w) : AxiomViolation("WARP", std::move(w)) {}
};

class LawOfDemandViolation : public AxiomViolation {
 public:
  explicit LawOfDemandViolation(std::vector<std::size_t> w)
      : AxiomViolation("law of demand", std::move(w)) {}
};

class StrongLawViolation : public AxiomViolation {
 public:
  explicit StrongLawViolation(std::vector<std::size_t> w)
      : AxiomViolation("strong law of demand", std::move(w)) {}
};

/// An exhaustive enumeration would exceed the configured cap.
class PatternExplosion : public std::runtime_error {
 public:
  PatternExplosion(std::size_t needed, std::size_t cap)
      : std::runtime_error("pattern enumeration needs " + std::to_string(needed) +
                           " branches, cap is " + std::to_string(cap)),
        needed(needed),
        cap(cap) {}
  std::size_t needed, cap;
};

/// Numerical failure inside the LP subroutine.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

}  // namespace revpref

#endif
