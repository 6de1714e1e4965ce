#include "sunlab/config.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sunlab {

void Config::validate() const {
  if (!(Rational(0) < extent)) throw std::invalid_argument("Config: extent must be positive");
  if (pair_budget <= 0 || sweep_budget <= 0)
    throw std::invalid_argument("Config: budgets must be positive");
  if (!(Rational(0) < oracle_resolution))
    throw std::invalid_argument("Config: oracle resolution must be positive");
  if (jobs <= 0) throw std::invalid_argument("Config: jobs must be positive");
  auto check_schedule = [](const std::vector<Rational>& s, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string("Config: empty ") + what);
    for (size_t i = 0; i < s.size(); ++i) {
      if (!(Rational(0) < s[i]))
        throw std::invalid_argument(std::string("Config: nonpositive entry in ") + what);
      if (i && !(s[i - 1] < s[i]))
        throw std::invalid_argument(std::string("Config: ") + what + " must increase");
    }
  };
  check_schedule(lambda_schedule, "lambda schedule");
  // densities decrease (they are refinements), so check the reverse
  for (size_t i = 0; i < densities.size(); ++i) {
    if (!(Rational(0) < densities[i]))
      throw std::invalid_argument("Config: nonpositive density");
    if (i && !(densities[i] < densities[i - 1]))
      throw std::invalid_argument("Config: densities must refine (strictly decrease)");
  }
  if (densities.empty()) throw std::invalid_argument("Config: empty density ladder");
}

SearchBudget Config::search_budget() const {
  SearchBudget b;
  b.pair_budget = pair_budget;
  b.seed = seed;
  b.densities = densities;
  return b;
}

std::uint64_t seed_or_env(const std::uint64_t* explicit_seed) {
  if (explicit_seed) return *explicit_seed;
  if (const char* env = std::getenv("SUNLAB_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 1;
}

}  // namespace sunlab
