#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mgonal {

inline constexpr std::uint64_t kDefaultBound = 100'000;
/// Largest bound a RepresentationSet may be built for (bits, i.e. 512 MiB).
inline constexpr std::uint64_t kDefaultBoundCap = std::uint64_t{1} << 32;

/// Generalized m-gonal number ((m-2)x^2 - (m-4)x)/2. Throws DomainError for m < 3.
std::uint64_t polygonal_value(int m, std::int64_t x);

/// All generalized m-gonal numbers in [0, bound], sorted and distinct.
std::vector<std::uint64_t> polygonal_values_up_to(int m, std::uint64_t bound);

/// The sum a_1 P_m(x_1) + ... + a_n P_m(x_n), coefficients kept sorted.
class PolygonalForm {
 public:
  PolygonalForm(int m, std::vector<std::uint32_t> coeffs);

  int m() const noexcept { return m_; }
  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::uint64_t gcd() const noexcept { return gcd_; }

  /// The form with one more coefficient appended; `next` must be >= the last one.
  PolygonalForm extended(std::uint32_t next) const;

  /// "[1,2,4]"
  std::string to_string() const;

  friend bool operator==(const PolygonalForm&, const PolygonalForm&) = default;

 private:
  int m_;
  std::vector<std::uint32_t> coeffs_;
  std::uint64_t gcd_;
};

/// Exact membership of {0, ..., bound} in the value set of a form.
class RepresentationSet {
 public:
  /// The value set of the empty sum: {0}.
  static RepresentationSet zero_only(std::uint64_t bound, std::uint64_t bound_cap = kDefaultBoundCap);

  std::uint64_t bound() const noexcept { return bound_; }
  bool contains(std::uint64_t k) const noexcept;
  std::uint64_t count() const noexcept;

  /// Smallest k >= from (k <= bound) not in the set.
  std::optional<std::uint64_t> first_missing(std::uint64_t from = 1) const noexcept;
  std::vector<std::uint64_t> missing() const;
  bool is_subset_of(const RepresentationSet& other) const;

  /// { s + coeff * v : s in this set, v in values }, truncated at bound.
  /// `values` must be sorted ascending.
  RepresentationSet folded(std::span<const std::uint64_t> values, std::uint32_t coeff) const;

  friend bool operator==(const RepresentationSet&, const RepresentationSet&) = default;

 private:
  explicit RepresentationSet(std::uint64_t bound);

  std::uint64_t bound_;
  std::vector<std::uint64_t> words_;
};

RepresentationSet represented_set(const PolygonalForm& form, std::uint64_t bound,
                                  std::uint64_t bound_cap = kDefaultBoundCap);

/// Smallest positive integer not represented, or "universal up to the bound".
class Truant {
 public:
  static Truant universal() { return Truant(std::nullopt); }
  static Truant at(std::uint64_t value) { return Truant(value); }

  bool is_universal() const noexcept { return !value_; }
  /// Requires !is_universal().
  std::uint64_t value() const { return value_.value(); }
  std::string to_string() const;

  friend bool operator==(const Truant&, const Truant&) = default;

 private:
  explicit Truant(std::optional<std::uint64_t> v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

Truant truant_of(const RepresentationSet& set);
Truant truant(const PolygonalForm& form, std::uint64_t bound);

}  // namespace mgonal
