#include <cstdio>

#include "akstab/acceptance.hpp"

int main() {
  const auto seed = akstab::acceptance_seed();
  std::printf("acceptance seed %llu\n", static_cast<unsigned long long>(seed));
  bool ok = true;
  akstab::run_acceptance(seed, [&](const akstab::CriterionResult& r) {
    std::printf("%s\n", akstab::to_string(r).c_str());
    std::fflush(stdout);
    ok = ok && r.pass();
  });
  return ok ? 0 : 1;
}
