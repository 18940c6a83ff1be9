#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mrc {

/// Base class for every error raised by the simulator or an algorithm on
/// top of it. `round_index` is -1 until a job annotates the failing round.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string what) : std::runtime_error(std::move(what)) {}
  int round_index = -1;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string key_repr, std::uint64_t needed, std::uint64_t limit)
      : Error("machine " + key_repr + " needs " + std::to_string(needed) +
              " words, budget is " + std::to_string(limit)),
        key_repr(std::move(key_repr)),
        words_needed(needed),
        budget_words(limit) {}
  std::string key_repr;
  std::uint64_t words_needed = 0;
  std::uint64_t budget_words = 0;
};

class NonDeterministicKey : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class EpsilonOutOfRange : public Error {
 public:
  using Error::Error;
};

class DecompositionInvalid : public Error {
 public:
  using Error::Error;
};

class RangeExceeded : public Error {
 public:
  using Error::Error;
};

class NegativeCycle : public Error {
 public:
  explicit NegativeCycle(int vertex)
      : Error("negative cycle through vertex " + std::to_string(vertex)),
        vertex(vertex) {}
  int vertex;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

class NegativeWeight : public Error {
 public:
  using Error::Error;
};

class ReconstructionFailure : public Error {
 public:
  using Error::Error;
};

class NoReplacement : public Error {
 public:
  using Error::Error;
};

class NoSecondPath : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mrc
