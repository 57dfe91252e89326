#ifndef LGM_MONOMIAL_HPP
#define LGM_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lgm {

/// Exponent vector of fixed length (the registry size).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {}

  static Monomial var(size_t nvars, size_t i, uint32_t e = 1) {
    Monomial m(nvars);
    m.e_.at(i) = e;
    return m;
  }

  size_t nvars() const { return e_.size(); }
  uint32_t operator[](size_t i) const { return e_[i]; }
  uint32_t& operator[](size_t i) { return e_[i]; }
  const std::vector<uint32_t>& exps() const { return e_; }

  uint64_t degree() const {
    return std::accumulate(e_.begin(), e_.end(), uint64_t{0});
  }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](uint32_t x) { return x == 0; });
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.sized_like(b));
    for (size_t i = 0; i < r.e_.size(); ++i) {
      uint64_t s = uint64_t{a.e_[i]} + b.e_[i];
      if (s > UINT32_MAX) throw std::overflow_error("monomial exponent overflow");
      r.e_[i] = static_cast<uint32_t>(s);
    }
    return r;
  }

  /// true when this divides other componentwise.
  bool divides(const Monomial& other) const {
    sized_like(other);
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  /// other / this, exact.
  Monomial divide_into(const Monomial& other) const {
    if (!divides(other)) throw std::domain_error("monomial division not exact");
    Monomial r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = other.e_[i] - e_[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.sized_like(b));
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  bool coprime_with(const Monomial& b) const {
    sized_like(b);
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  size_t sized_like(const Monomial& other) const {
    if (e_.size() != other.e_.size())
      throw std::invalid_argument("monomials over different registries");
    return e_.size();
  }

  std::vector<uint32_t> e_;
};

}  // namespace lgm

#endif
