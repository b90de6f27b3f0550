#include "mgonal/polygonal.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "mgonal/errors.hpp"

namespace mgonal {

namespace {

void require_m(int m) {
  if (m < 3) throw DomainError("m must be >= 3, got " + std::to_string(m));
}

constexpr std::uint64_t kWordBits = 64;

}  // namespace

std::uint64_t polygonal_value(int m, std::int64_t x) {
  require_m(m);
  const __int128 xx = x;
  const __int128 twice = (m - 2) * xx * xx - (m - 4) * xx;
  const __int128 v = twice / 2;
  if (v > static_cast<__int128>(std::numeric_limits<std::uint64_t>::max())) {
    throw DomainError("P_m(x) overflows 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

std::vector<std::uint64_t> polygonal_values_up_to(int m, std::uint64_t bound) {
  require_m(m);
  std::vector<std::uint64_t> out;
  // P_m is increasing in |x| on each side of 0, so each walk can stop at the first overshoot.
  for (std::int64_t x = 0;; ++x) {
    const std::uint64_t v = polygonal_value(m, x);
    if (v > bound) break;
    out.push_back(v);
  }
  for (std::int64_t x = -1;; --x) {
    const std::uint64_t v = polygonal_value(m, x);
    if (v > bound) break;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PolygonalForm::PolygonalForm(int m, std::vector<std::uint32_t> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
  require_m(m_);
  if (coeffs_.empty()) throw DomainError("a polygonal form needs at least one coefficient");
  for (auto a : coeffs_) {
    if (a == 0) throw DomainError("coefficients must be positive");
    if (a > static_cast<std::uint32_t>(std::numeric_limits<std::int32_t>::max())) {
      throw DomainError("coefficients are capped at 2^31 - 1");
    }
  }
  std::sort(coeffs_.begin(), coeffs_.end());
  gcd_ = 0;
  for (auto a : coeffs_) gcd_ = std::gcd(gcd_, std::uint64_t{a});
}

PolygonalForm PolygonalForm::extended(std::uint32_t next) const {
  if (next < coeffs_.back()) throw DomainError("extension coefficient below the last coefficient");
  auto c = coeffs_;
  c.push_back(next);
  return PolygonalForm(m_, std::move(c));
}

std::string PolygonalForm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coeffs_[i]);
  }
  return s + "]";
}

RepresentationSet::RepresentationSet(std::uint64_t bound)
    : bound_(bound), words_(bound / kWordBits + 1, 0) {}

RepresentationSet RepresentationSet::zero_only(std::uint64_t bound, std::uint64_t bound_cap) {
  if (bound > bound_cap) {
    throw ResourceError("bound " + std::to_string(bound) + " exceeds the cap " + std::to_string(bound_cap));
  }
  RepresentationSet s(bound);
  s.words_[0] = 1;
  return s;
}

bool RepresentationSet::contains(std::uint64_t k) const noexcept {
  if (k > bound_) return false;
  return (words_[k / kWordBits] >> (k % kWordBits)) & 1U;
}

std::uint64_t RepresentationSet::count() const noexcept {
  std::uint64_t n = 0;
  for (auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

std::optional<std::uint64_t> RepresentationSet::first_missing(std::uint64_t from) const noexcept {
  if (from > bound_) return std::nullopt;
  std::size_t wi = from / kWordBits;
  std::uint64_t w = ~words_[wi] & (~std::uint64_t{0} << (from % kWordBits));
  for (;;) {
    if (w != 0) {
      const std::uint64_t k = wi * kWordBits + static_cast<std::uint64_t>(std::countr_zero(w));
      if (k > bound_) return std::nullopt;
      return k;
    }
    if (++wi == words_.size()) return std::nullopt;
    w = ~words_[wi];
  }
}

std::vector<std::uint64_t> RepresentationSet::missing() const {
  std::vector<std::uint64_t> out;
  for (auto k = first_missing(0); k; k = first_missing(*k + 1)) out.push_back(*k);
  return out;
}

bool RepresentationSet::is_subset_of(const RepresentationSet& other) const {
  if (other.bound_ != bound_) throw DomainError("representation sets over different bounds");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

RepresentationSet RepresentationSet::folded(std::span<const std::uint64_t> values, std::uint32_t coeff) const {
  RepresentationSet out(bound_);
  const std::size_t nwords = words_.size();
  // Highest word that holds a set bit; shifts never need to read past it.
  std::size_t top = nwords;
  while (top > 0 && words_[top - 1] == 0) --top;

  for (std::uint64_t v : values) {
    const unsigned __int128 shift128 = static_cast<unsigned __int128>(v) * coeff;
    if (shift128 > bound_) break;
    const std::uint64_t shift = static_cast<std::uint64_t>(shift128);
    const std::size_t ws = shift / kWordBits;
    const unsigned bs = shift % kWordBits;
    const std::size_t end = std::min(nwords, top + ws + 1);
    if (bs == 0) {
      for (std::size_t i = ws; i < end; ++i) out.words_[i] |= words_[i - ws];
    } else {
      out.words_[ws] |= words_[0] << bs;
      for (std::size_t i = ws + 1; i < end; ++i) {
        const std::size_t j = i - ws;
        const std::uint64_t lo = words_[j - 1] >> (kWordBits - bs);
        const std::uint64_t hi = j < nwords ? words_[j] << bs : 0;
        out.words_[i] |= hi | lo;
      }
    }
  }
  // Clear bits past the bound.
  const unsigned tail = (bound_ + 1) % kWordBits;
  if (tail != 0) out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return out;
}

RepresentationSet represented_set(const PolygonalForm& form, std::uint64_t bound, std::uint64_t bound_cap) {
  const auto values = polygonal_values_up_to(form.m(), bound);
  auto set = RepresentationSet::zero_only(bound, bound_cap);
  for (auto a : form.coeffs()) set = set.folded(values, a);
  return set;
}

std::string Truant::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("universal");
}

Truant truant_of(const RepresentationSet& set) {
  if (auto k = set.first_missing(1)) return Truant::at(*k);
  return Truant::universal();
}

Truant truant(const PolygonalForm& form, std::uint64_t bound) {
  if (bound < 1) throw DomainError("truant search needs bound >= 1");
  return truant_of(represented_set(form, bound));
}

}  // namespace mgonal
