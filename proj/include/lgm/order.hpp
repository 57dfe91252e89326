#ifndef LGM_ORDER_HPP
#define LGM_ORDER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "lgm/monomial.hpp"

namespace lgm {

enum class OrderKind { grevlex, lex, elim };

/// Term orders. Variables earlier in the registry are larger.
///
/// grevlex: total degree first, ties by reverse lexicographic comparison
/// (the smaller last differing exponent wins). This is the canonical order
/// used for printing and the default for Groebner computations.
///
/// elim: block order eliminating the tail block [split, n): the tail
/// exponents are compared grevlex first, then the head. Any monomial using a
/// tail variable is larger than any monomial free of them, so basis elements
/// whose lead is tail-free generate the elimination ideal.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, 0); }
  static MonomialOrder elimination(size_t split) {
    return MonomialOrder(OrderKind::elim, split);
  }

  OrderKind kind() const { return kind_; }
  size_t split() const { return split_; }

  /// -1 when a < b, 0 when equal, +1 when a > b.
  int cmp(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
      throw std::invalid_argument("order: monomials over different registries");
    switch (kind_) {
      case OrderKind::grevlex:
        return cmp_grevlex(a, b, 0, a.nvars());
      case OrderKind::lex:
        return cmp_lex(a, b);
      case OrderKind::elim: {
        if (split_ > a.nvars()) throw std::invalid_argument("order: bad split");
        if (int c = cmp_grevlex(a, b, split_, a.nvars())) return c;
        return cmp_grevlex(a, b, 0, split_);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  std::string name() const {
    switch (kind_) {
      case OrderKind::grevlex: return "grevlex";
      case OrderKind::lex: return "lex";
      case OrderKind::elim: return "elim@" + std::to_string(split_);
    }
    return "?";
  }

 private:
  MonomialOrder(OrderKind k, size_t s) : kind_(k), split_(s) {}

  static int cmp_grevlex(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    uint64_t da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }

  static int cmp_lex(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.nvars(); ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  OrderKind kind_;
  size_t split_;
};

/// Strict "greater" comparator for descending-sorted containers.
struct OrderGreater {
  MonomialOrder order = MonomialOrder::grevlex();
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order.greater(a, b);
  }
};

}  // namespace lgm

#endif
