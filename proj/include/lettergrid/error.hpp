#pragma once

#include <stdexcept>

namespace lettergrid {

/// Malformed text input (permutation, graph, matrix, decoder or word files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lettergrid
