#include "scedeco/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "scedeco/errors.hpp"

namespace scedeco {

std::size_t configured_thread_count(std::size_t task_count) {
  const char* env = std::getenv("SCEDECO_THREADS");
  if (env == nullptr || task_count <= 1) return 1;
  std::size_t requested = 0;
  try {
    requested = static_cast<std::size_t>(std::stoull(env));
  } catch (const std::exception&) {
    throw config_error("SCEDECO_THREADS must be a positive integer");
  }
  if (requested == 0) throw config_error("SCEDECO_THREADS must be a positive integer");
  return std::min(requested, task_count);
}

}  // namespace scedeco
