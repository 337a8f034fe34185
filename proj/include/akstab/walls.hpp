#pragma once

#include <string>
#include <utility>
#include <vector>

#include "akstab/hn.hpp"
#include "akstab/twist.hpp"

namespace akstab {

enum class WallKind { Parallel, Antiparallel };
const char* to_string(WallKind k);

struct WallEvent {
  // The segment Z_t = (1 - t) from + t to.
  std::vector<GaussianRational> from, to;
  QuadNum time;
  // time is the root of qa t^2 + qb t + qc selected by root (-1 smaller,
  // +1 larger, 0 when the equation is linear).
  Rational qa, qb, qc;
  int root = 0;
  // Rational time strictly between this event and the next one (or 1).
  Rational after;
  std::vector<std::pair<int, int>> classes;
  WallKind kind = WallKind::Parallel;
};

std::string describe(const WallEvent& e);

std::vector<GaussianRational> interpolate(const std::vector<GaussianRational>& from,
                                          const std::vector<GaussianRational>& to, const Rational& t);

std::vector<WallEvent> walls_on_segment(const StabilityCondition& S, const std::vector<GaussianRational>& target);

// Moves S to the point just after e and applies the crossing rule.
StabilityCondition cross(const StabilityCondition& S, const WallEvent& e);

// Processes every wall on the segment to the target.
StabilityCondition move_along(const StabilityCondition& S, const std::vector<GaussianRational>& target,
                              std::vector<WallEvent>* events = nullptr);
// Closed or open polygonal path through the given charge vectors.
StabilityCondition track_path(const StabilityCondition& S, const std::vector<std::vector<GaussianRational>>& vertices,
                              std::vector<WallEvent>* events = nullptr);

struct SimpleReport {
  bool simple = true;
  std::vector<std::string> failures;
  // Pairs violating the literal chi condition a < c != b + 1 (reported only).
  std::vector<std::string> literal_discrepancies;
};
SimpleReport is_simple(const StabilityCondition& S, bool pedantic = false);

struct ClassMatch {
  int i, j;
  ObjExpr final_object;
  ObjExpr predicted;
  int shift = 0;  // final ~ predicted[shift]
  bool match = false;
};

struct LoopReport {
  int index = 1;
  int half_turns = 2;
  std::vector<std::vector<GaussianRational>> vertices;
  std::vector<WallEvent> events;
  StabilityCondition final_condition;
  std::vector<ClassMatch> matches;
  IntMatrix k_action;     // column j: class of the final stable tracking P_j
  IntMatrix k_predicted;  // twist_K(index)^half_turns
  bool all_match = true;
};

// Polygon driving Z(P_i) through half_turns * pi (clockwise when negative),
// the other charges fixed; the last vertex is the rotated end point.
std::vector<std::vector<GaussianRational>> rotation_path(const std::vector<GaussianRational>& Z, int i, int sides,
                                                        int half_turns);

// Rotates Z(P_i) anticlockwise through half_turns * pi along a polygon with
// `sides` vertices per full turn, keeping the other Z(P_j) fixed.
LoopReport generator_loop(const StabilityCondition& S, int i, int sides, int half_turns = 2);

// Rational point close to exp(i theta) on the unit circle, exactly of modulus 1.
GaussianRational unit_point(double theta);

}  // namespace akstab
