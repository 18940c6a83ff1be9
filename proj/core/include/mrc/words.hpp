#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <limits>
#include <variant>
#include <vector>

namespace mrc {

/// Sentinel for +infinity in the tropical (min,+) algebra. Kept out of the
/// range of any legal finite weight.
inline constexpr std::int64_t kInfWeight = std::numeric_limits<std::int64_t>::max();

inline bool is_inf(std::int64_t w) { return w == kInfWeight; }

/// Saturating tropical addition: inf absorbs.
inline std::int64_t trop_add(std::int64_t a, std::int64_t b) {
  if (is_inf(a) || is_inf(b)) return kInfWeight;
  return a + b;
}

/// Number of machine words an arbitrary-precision integer occupies.
/// A value of bit length b costs ceil(b/64) words, at least one.
inline std::uint64_t big_words(const mpz_class& z) {
  const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  return (bits + 63) / 64;
}

/// Payload of a key/value pair. Values are homogeneous runs of machine
/// words: bounded integers (1 word each), complex samples (2 words each)
/// or arbitrary-precision integers (ceil(bits/64) words each). Small
/// metadata (indices, coefficients, tags) is carried in-band as leading
/// entries of the run.
class Value {
 public:
  using Ints = std::vector<std::int64_t>;
  using Cpxs = std::vector<std::complex<double>>;
  using Bigs = std::vector<mpz_class>;

  Value() : data_(Ints{}) {}
  explicit Value(Ints v) : data_(std::move(v)) {}
  explicit Value(Cpxs v) : data_(std::move(v)) {}
  explicit Value(Bigs v) : data_(std::move(v)) {}

  static Value ints(Ints v) { return Value(std::move(v)); }
  static Value complexes(Cpxs v) { return Value(std::move(v)); }
  static Value bigs(Bigs v) { return Value(std::move(v)); }

  bool holds_ints() const { return std::holds_alternative<Ints>(data_); }
  bool holds_complexes() const { return std::holds_alternative<Cpxs>(data_); }
  bool holds_bigs() const { return std::holds_alternative<Bigs>(data_); }

  Ints& as_ints() { return std::get<Ints>(data_); }
  const Ints& as_ints() const { return std::get<Ints>(data_); }
  Cpxs& as_complexes() { return std::get<Cpxs>(data_); }
  const Cpxs& as_complexes() const { return std::get<Cpxs>(data_); }
  Bigs& as_bigs() { return std::get<Bigs>(data_); }
  const Bigs& as_bigs() const { return std::get<Bigs>(data_); }

  /// Metered size charged to the machine that receives this value.
  std::uint64_t word_count() const {
    if (holds_ints()) return as_ints().size();
    if (holds_complexes()) return 2 * as_complexes().size();
    std::uint64_t w = 0;
    for (const mpz_class& z : as_bigs()) w += big_words(z);
    return w;
  }

  /// Releases the heap storage once a machine has consumed the value.
  void release() { data_ = Ints{}; }

  bool operator==(const Value& other) const = default;

 private:
  std::variant<Ints, Cpxs, Bigs> data_;
};

}  // namespace mrc
