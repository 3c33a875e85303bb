#include "opcat/util.hpp"

#include <cstdlib>

namespace opcat {

int threadBudget() {
  const char* env = std::getenv("OPCAT_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

}  // namespace opcat
