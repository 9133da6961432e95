#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fusion {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is structurally malformed (wrong lengths, duplicate triples,
/// out-of-range indices, bad JSON shape). Distinct from axiom failures.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Fusion ring axioms

enum class RingAxiom { Unit, Duality, Associativity, FrobeniusSymmetry };

std::string_view to_string(RingAxiom axiom);

/// A fusion-ring axiom fails. `where()` is the offending index tuple, e.g.
/// (i, j, k) for unit/duality/Frobenius checks and (i, j, k, l) for
/// associativity.
class RingValidationError : public Error {
 public:
  RingValidationError(RingAxiom axiom, std::vector<std::size_t> where, const std::string& detail);

  RingAxiom axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& where() const noexcept { return where_; }

 private:
  RingAxiom axiom_;
  std::vector<std::size_t> where_;
};

class UnitAxiomViolation : public RingValidationError {
 public:
  UnitAxiomViolation(std::vector<std::size_t> where, const std::string& detail)
      : RingValidationError(RingAxiom::Unit, std::move(where), detail) {}
};

class DualityViolation : public RingValidationError {
 public:
  DualityViolation(std::vector<std::size_t> where, const std::string& detail)
      : RingValidationError(RingAxiom::Duality, std::move(where), detail) {}
};

class AssociativityViolation : public RingValidationError {
 public:
  AssociativityViolation(std::vector<std::size_t> where, const std::string& detail)
      : RingValidationError(RingAxiom::Associativity, std::move(where), detail) {}
};

class FrobeniusSymmetryViolation : public RingValidationError {
 public:
  FrobeniusSymmetryViolation(std::vector<std::size_t> where, const std::string& detail)
      : RingValidationError(RingAxiom::FrobeniusSymmetry, std::move(where), detail) {}
};

// ---------------------------------------------------------------------------
// Morphism axioms

enum class MorphismAxiom { UnitImage, Multiplicativity, DualCompat, Dimension };

std::string_view to_string(MorphismAxiom axiom);

class MorphismValidationError : public Error {
 public:
  MorphismValidationError(MorphismAxiom axiom, std::vector<std::size_t> where,
                          const std::string& detail);

  MorphismAxiom axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& where() const noexcept { return where_; }

 private:
  MorphismAxiom axiom_;
  std::vector<std::size_t> where_;
};

class UnitImageViolation : public MorphismValidationError {
 public:
  explicit UnitImageViolation(const std::string& detail)
      : MorphismValidationError(MorphismAxiom::UnitImage, {}, detail) {}
};

class MultiplicativityViolation : public MorphismValidationError {
 public:
  MultiplicativityViolation(std::size_t i, std::size_t j, const std::string& detail)
      : MorphismValidationError(MorphismAxiom::Multiplicativity, {i, j}, detail) {}
};

class DualCompatViolation : public MorphismValidationError {
 public:
  DualCompatViolation(std::size_t i, const std::string& detail)
      : MorphismValidationError(MorphismAxiom::DualCompat, {i}, detail) {}
};

class DimensionMismatch : public MorphismValidationError {
 public:
  DimensionMismatch(std::size_t i, const std::string& detail)
      : MorphismValidationError(MorphismAxiom::Dimension, {i}, detail) {}
};

// ---------------------------------------------------------------------------
// Operation-level failures

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class RankBoundExceeded : public Error {
 public:
  RankBoundExceeded(std::size_t rank, std::size_t bound);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t rank_;
  std::size_t bound_;
};

class NotDominant : public Error {
 public:
  using Error::Error;
};

/// FPdim(source)/FPdim(target) disagrees with FPdim of the induced algebra.
/// Only possible for data that is not the shadow of a tensor functor.
class IndexAlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class KernelNotClosed : public Error {
 public:
  using Error::Error;
};

class NonIntegerGlobalDim : public Error {
 public:
  using Error::Error;
};

class InvalidGroupTable : public Error {
 public:
  using Error::Error;
};

class NonAbelianGroup : public Error {
 public:
  using Error::Error;
};

class NotNormalSubgroup : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class NotTambaraYamagami : public Error {
 public:
  using Error::Error;
};

}  // namespace fusion
