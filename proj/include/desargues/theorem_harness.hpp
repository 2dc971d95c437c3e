#pragma once

// Named, reproducible verification scenarios for the involution theorems,
// and a seeded fuzzer for random pencils over finite fields. Every check is
// exact; a failing check carries its inputs and both sides of the equation.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "desargues/ambient_pencil.hpp"

namespace desargues {

using Witness = std::vector<std::pair<std::string, std::string>>;

struct Check {
  std::string name;
  bool pass = true;
  Witness witness;
};

struct ScenarioReport {
  std::string scenario;
  std::string field;
  std::string instance;
  std::optional<std::uint64_t> seed;
  std::vector<Check> checks;
  bool pass = true;
  /// Named counters (cases examined, verdict tallies).
  std::vector<std::pair<std::string, std::uint64_t>> stats;

  void add(Check c);
  std::uint64_t stat(const std::string& name) const;
};

/// Orthogonality of every conjugate pair {P, inv(P)} to the Desargues form.
/// Exhaustive over GF(3) and GF(5); otherwise `trials` seeded random cases.
ScenarioReport verify_prop1(const Field& field, std::size_t trials, std::uint64_t seed);

/// diagnose on the restricted pencil, then either the pair checks on
/// `members` pencil members (0 = all p + 1 over GF(p), 12 over Q), or the
/// failure witness together with the constructive only-if check.
ScenarioReport verify_main_theorem(const Pencil& p, const LineInPV& line, std::size_t members = 0);

/// Fixed points M, N of the induced involution are orthogonal under every
/// restricted member, and every member's pair is harmonic with respect to
/// M and N. Requires a regular restriction (reported as a failed check
/// otherwise).
ScenarioReport verify_prop3(const Pencil& p, const LineInPV& line, std::size_t members = 0);

/// Affine line P0 + t D through the marked point M, with a pencil of
/// quadrics in the projective closure (matrices of size n + 1).
struct AffineConfig {
  Vector p0;
  Vector direction;
  Vector marked;
  Pencil pencil;
  /// Members that must be tangent at M or meet the line symmetrically
  /// about M; R and S when empty.
  std::vector<std::pair<Scalar, Scalar>> hypothesis_members;
  /// Members to classify; 0 means the default enumeration.
  std::size_t members = 0;

  std::size_t dim() const { return p0.size(); }
};

/// Line coordinates with M = (0 : 1) and the direction point N = (1 : 0).
LineInPV butterfly_line(const AffineConfig& cfg);

enum class ButterflyBranch { TangentAtM, Asymptote, SymmetricPair };
std::string_view to_string(ButterflyBranch b);

/// Checks that the induced involution is x -> -x in butterfly_line
/// coordinates and classifies each member into exactly one branch.
/// Throws HypothesisViolation when the hypothesis members are neither
/// tangent at M nor symmetric about M, or when the configuration is
/// inconsistent (M off the line, zero direction, wrong dimensions).
ScenarioReport verify_butterfly(const AffineConfig& cfg);

struct ClassicalScenario {
  std::vector<Vector> points;  // homogeneous (x, y, z)
  Pencil pencil;               // (AB)(CD) and (AC)(BD)
  std::vector<LineInPV> suggested_lines;
};

/// The pencil of conics through four points of the plane, in homogeneous
/// coordinates. Throws DegeneratePosition when three of them are collinear.
ClassicalScenario classical_desargues_scenario(const Vector& a, const Vector& b, const Vector& c,
                                               const Vector& d);

/// The four points (+-1, +-1) and the line y = 2x over `field`.
ClassicalScenario default_classical_scenario(const Field& field);
LineInPV default_classical_line(const Field& field);

/// Every member of the four-point pencil vanishes at the four points, and
/// the main theorem holds on `line`.
ScenarioReport verify_classical(const ClassicalScenario& s, const LineInPV& line,
                                std::size_t members = 0);

/// Random pencils and lines of P^dim over `field`; per trial the main
/// theorem and, when regular, the fixed-point checks. Trial k draws from
/// mix_seed(seed, k), so the report depends only on the arguments.
ScenarioReport fuzz_campaign(const Field& field, std::size_t dim, std::size_t trials,
                             std::uint64_t seed);

}  // namespace desargues
