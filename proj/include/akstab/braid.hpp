#pragma once

#include <vector>

#include "akstab/numeric.hpp"

namespace akstab {

// Signed generator indices: +j is sigma_j, -j its inverse. On n strands the
// indices run over 1..n-1.
using BraidWord = std::vector<int>;
// Dynnikov coordinates (a_1, b_1, ..., a_n, b_n).
using LaminationCoords = std::vector<Integer>;

BraidWord free_reduce(const BraidWord& w);
BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
std::string to_string(const BraidWord& w);
BraidWord parse_word(const std::string& text);

LaminationCoords base_coords(int strands);
LaminationCoords coords_action(const BraidWord& w, const LaminationCoords& c);
bool is_trivial(const BraidWord& w, int strands);

struct Configuration {
  std::vector<GaussianRational> points;
  bool normalized = false;
};

// Points 0, Z_1, Z_1 + Z_2, ..., optionally translated to mean zero.
Configuration config_from_charge(const std::vector<GaussianRational>& Z, bool normalize = false);
Configuration rotated(const Configuration& c, const GaussianRational& unit);

// Closed loop through the configurations (the last one joins the first).
// Strands are ordered by real part; a crossing in which the left strand
// passes below (smaller imaginary part) is sigma_j, otherwise sigma_j^-1,
// so a counterclockwise half turn of two points is sigma_1.
BraidWord braid_of_loop(const std::vector<Configuration>& loop);

}  // namespace akstab
