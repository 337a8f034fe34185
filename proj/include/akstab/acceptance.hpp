#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace akstab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool correct = true;
  double seconds = 0;
  double limit = 0;
  std::string detail;

  bool pass() const { return correct && seconds < limit; }
};

std::string to_string(const CriterionResult& r);

// Default seed, overridden by AKSTAB_SEED.
std::uint64_t acceptance_seed();

CriterionResult run_criterion(int id, std::uint64_t seed);

// Runs criteria 1..9 in order; on_result is called after each.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace akstab
