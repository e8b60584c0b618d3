#ifndef HALOBRAID_ERRORS_HPP_
#define HALOBRAID_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace halobraid {

// Every error raised by the library derives from halobraid::error so callers
// can catch the whole family at once. The CLI maps the subclasses onto its
// exit codes (input 2, resource 3, verification 4).
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class input_error : public error {
 public:
  using error::error;
};

class parse_error : public input_error {
 public:
  using input_error::input_error;
};

class unknown_vertex_error : public input_error {
 public:
  explicit unknown_vertex_error(std::string const& v)
      : input_error("unknown vertex '" + v + "'") {}
};

class unknown_generator_error : public input_error {
 public:
  explicit unknown_generator_error(std::string const& g)
      : input_error("unknown generator '" + g + "'") {}
};

class empty_graph_error : public input_error {
 public:
  empty_graph_error() : input_error("graph has no vertices") {}
};

class size_exceeded_error : public error {
 public:
  using error::error;
};

class improper_coloring_error : public error {
 public:
  using error::error;
};

class base_mismatch_error : public error {
 public:
  using error::error;
};

class insufficient_subdivision_error : public error {
 public:
  using error::error;
};

// Raised when a configuration-space move would make two tokens collide.
// Unreachable for verified halos.
class illegal_step_error : public error {
 public:
  using error::error;
};

// A candidate halo or context failed its axioms.
class verification_error : public error {
 public:
  using error::error;
};

}  // namespace halobraid

#endif  // HALOBRAID_ERRORS_HPP_
