#include "fusion/error.hpp"

#include <sstream>

namespace fusion {

namespace {

std::string format_tuple(const std::vector<std::size_t>& where) {
  std::ostringstream os;
  os << '(';
  for (std::size_t n = 0; n < where.size(); ++n) {
    if (n != 0) os << ", ";
    os << where[n];
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string_view to_string(RingAxiom axiom) {
  switch (axiom) {
    case RingAxiom::Unit: return "UnitAxiomViolation";
    case RingAxiom::Duality: return "DualityViolation";
    case RingAxiom::Associativity: return "AssociativityViolation";
    case RingAxiom::FrobeniusSymmetry: return "FrobeniusSymmetryViolation";
  }
  return "RingValidationError";
}

std::string_view to_string(MorphismAxiom axiom) {
  switch (axiom) {
    case MorphismAxiom::UnitImage: return "UnitImageViolation";
    case MorphismAxiom::Multiplicativity: return "MultiplicativityViolation";
    case MorphismAxiom::DualCompat: return "DualCompatViolation";
    case MorphismAxiom::Dimension: return "DimensionMismatch";
  }
  return "MorphismValidationError";
}

RingValidationError::RingValidationError(RingAxiom axiom, std::vector<std::size_t> where,
                                         const std::string& detail)
    : Error(std::string(to_string(axiom)) + " at " + format_tuple(where) + ": " + detail),
      axiom_(axiom),
      where_(std::move(where)) {}

MorphismValidationError::MorphismValidationError(MorphismAxiom axiom,
                                                 std::vector<std::size_t> where,
                                                 const std::string& detail)
    : Error(std::string(to_string(axiom)) + (where.empty() ? "" : " at " + format_tuple(where)) +
            ": " + detail),
      axiom_(axiom),
      where_(std::move(where)) {}

RankBoundExceeded::RankBoundExceeded(std::size_t rank, std::size_t bound)
    : Error("rank " + std::to_string(rank) + " exceeds the configured bound " +
            std::to_string(bound)),
      rank_(rank),
      bound_(bound) {}

}  // namespace fusion
