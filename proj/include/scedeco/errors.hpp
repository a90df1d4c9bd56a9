#pragma once

#include <stdexcept>
#include <string>

namespace scedeco {

// Error taxonomy shared by all modules. The CLI maps these onto its
// documented exit codes, so new error types should pick the closest
// existing base rather than inventing parallel hierarchies.

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration or arguments (CLI exit code 2).
class config_error : public error {
 public:
  using error::error;
};

// A genome does not fit the environment it is being run in.
class domain_mismatch_error : public error {
 public:
  using error::error;
};

// Unknown goal atom, fitness measure, or environment id.
class registry_error : public error {
 public:
  using error::error;
};

// Fitness values of different kinds cannot be compared.
class comparison_error : public error {
 public:
  using error::error;
};

// An interaction projection selects no fields of a joint state.
class projection_error : public error {
 public:
  using error::error;
};

// A scenario update tried to make a scenario easier.
class hardening_violation_error : public error {
 public:
  using error::error;
};

// Pointwise max over a partially ordered fitness kind.
class max_undefined_error : public error {
 public:
  using error::error;
};

// A predicted behavior record does not fit the environment.
class shape_error : public error {
 public:
  using error::error;
};

// Lineage log structure violation (sequence gap, dangling reference).
class integrity_error : public error {
 public:
  using error::error;
};

// Lineage log format version not understood.
class version_error : public error {
 public:
  using error::error;
};

// Replay diverged from the recorded run.
class corruption_error : public error {
 public:
  using error::error;
};

// The engine produced a run that fails its own validators (exit code 3).
class internal_consistency_error : public error {
 public:
  using error::error;
};

// Operation not available for this configuration (e.g. context mutation
// on a non-parameterizable environment).
class unsupported_error : public error {
 public:
  using error::error;
};

// Brute-force oracle asked about an instance it cannot enumerate.
class oracle_scale_error : public error {
 public:
  using error::error;
};

// Filesystem failures (CLI exit code 4).
class io_error : public error {
 public:
  using error::error;
};

}  // namespace scedeco
