#ifndef LGM_COMPLEXES_HPP
#define LGM_COMPLEXES_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgm/linalg.hpp"
#include "lgm/parse.hpp"
#include "lgm/quotient_ring.hpp"
#include "lgm/sampling.hpp"

namespace lgm {

/// Matrix of a map between free modules. entries[r][c] pairs target
/// generator r with source generator c.
struct FreeModuleMap {
  std::vector<std::vector<RatPoly>> entries;

  size_t target_rank() const { return entries.size(); }
  size_t source_rank() const { return entries.empty() ? 0 : entries[0].size(); }

  static FreeModuleMap scalar(RatPoly p) {
    FreeModuleMap m;
    m.entries.push_back({std::move(p)});
    return m;
  }

  void require_rectangular() const {
    if (entries.empty() || entries[0].empty())
      throw std::invalid_argument("module map needs at least one entry");
    for (const auto& row : entries)
      if (row.size() != entries[0].size())
        throw std::invalid_argument("module map matrix is ragged");
  }
};

/// Transcript line for one map, target module on the left. Rank-1 maps show
/// the bare entry; larger maps show the matrix row-major.
inline std::string print_line(const FreeModuleMap& m) {
  std::string inner;
  if (m.target_rank() == 1 && m.source_rank() == 1) {
    inner = format_poly(m.entries[0][0]);
  } else {
    for (size_t r = 0; r < m.entries.size(); ++r) {
      if (r) inner += ", ";
      inner += "[";
      for (size_t c = 0; c < m.entries[r].size(); ++c) {
        if (c) inner += ", ";
        inner += format_poly(m.entries[r][c]);
      }
      inner += "]";
    }
  }
  return "S^" + std::to_string(m.target_rank()) + " <--[" + inner + "]-- S^" +
         std::to_string(m.source_rank());
}

/// A free module S^rank, optionally cut down to the cyclic submodule
/// generated by one monomial (rank 1 only); its degree slices are then the
/// standard monomials divisible by that generator.
struct ModuleSpec {
  size_t rank = 1;
  std::optional<Monomial> cyclic_gen;
};

/// Sequence of composable maps over one quotient ring; maps[k] runs from
/// module k to module k+1, so a transcript prints maps[0] first with its
/// target on the left.
class ChainComplex {
 public:
  ChainComplex(QuotientRing ring, std::vector<FreeModuleMap> maps,
               std::vector<ModuleSpec> modules = {})
      : ring_(std::move(ring)), maps_(std::move(maps)), modules_(std::move(modules)) {
    if (maps_.empty()) throw std::invalid_argument("complex needs at least one map");
    for (auto& m : maps_) {
      m.require_rectangular();
      for (auto& row : m.entries)
        for (auto& e : row) {
          require_same_registry(e.registry(), ring_.registry());
          e = ring_.nf(e);
        }
    }
    for (size_t k = 0; k + 1 < maps_.size(); ++k)
      if (maps_[k].target_rank() != maps_[k + 1].source_rank())
        throw std::invalid_argument("complex maps have mismatched ranks");

    if (modules_.empty()) {
      for (const auto& m : maps_) modules_.push_back({m.source_rank(), {}});
      modules_.push_back({maps_.back().target_rank(), {}});
    }
    if (modules_.size() != maps_.size() + 1)
      throw std::invalid_argument("complex needs one module per end of each map");
    for (size_t k = 0; k < maps_.size(); ++k)
      if (modules_[k].rank != maps_[k].source_rank() ||
          modules_[k + 1].rank != maps_[k].target_rank())
        throw std::invalid_argument("module ranks disagree with map shapes");
    for (const auto& spec : modules_)
      if (spec.cyclic_gen) {
        if (spec.rank != 1)
          throw std::invalid_argument("cyclic submodule requires rank 1");
        if (!ring_.is_standard(*spec.cyclic_gen))
          throw std::invalid_argument("cyclic generator vanishes in the ring");
      }
  }

  const QuotientRing& ring() const { return ring_; }
  const std::vector<FreeModuleMap>& maps() const { return maps_; }
  const std::vector<ModuleSpec>& modules() const { return modules_; }
  size_t length() const { return maps_.size(); }

 private:
  QuotientRing ring_;
  std::vector<FreeModuleMap> maps_;
  std::vector<ModuleSpec> modules_;
};

/// Every consecutive composite reduces to zero modulo the relations (on the
/// declared submodule when the source is cyclic).
inline bool check_complex(const ChainComplex& c) {
  const auto& maps = c.maps();
  for (size_t k = 0; k + 1 < maps.size(); ++k) {
    const auto& a = maps[k];      // module k   -> module k+1
    const auto& b = maps[k + 1];  // module k+1 -> module k+2
    for (size_t r = 0; r < b.target_rank(); ++r)
      for (size_t s = 0; s < a.source_rank(); ++s) {
        RatPoly comp = RatPoly::zero(c.ring().registry());
        for (size_t m = 0; m < a.target_rank(); ++m)
          comp += b.entries[r][m] * a.entries[m][s];
        if (const auto& gen = c.modules()[k].cyclic_gen)
          comp = comp.times_term(*gen, Rat(1));
        if (!c.ring().is_zero_mod(comp)) return false;
      }
  }
  return true;
}

/// A*B = B*A = p*Identity as exact polynomial identities over the ambient
/// ring; nothing is reduced.
inline bool matrix_factorization_check(const FreeModuleMap& a, const FreeModuleMap& b,
                                       const RatPoly& p) {
  a.require_rectangular();
  b.require_rectangular();
  size_t n = a.target_rank();
  if (a.source_rank() != n || b.target_rank() != n || b.source_rank() != n)
    throw std::invalid_argument("matrix factorization needs equal square ranks");
  auto product_is_scalar = [&](const FreeModuleMap& x, const FreeModuleMap& y) {
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        RatPoly e = RatPoly::zero(p.registry());
        for (size_t m = 0; m < n; ++m) e += x.entries[r][m] * y.entries[m][c];
        if (r == c ? (e != p) : !e.is_zero_poly()) return false;
      }
    return true;
  };
  return product_is_scalar(a, b) && product_is_scalar(b, a);
}

/// The two-periodic rank-1 resolution transcript over k[z1..zn]/(z1...zn):
/// maps[0] multiplies by z_i and presents the ideal (z_i); odd positions
/// multiply by the complementary product.
inline ChainComplex build_periodic_resolution(size_t n, size_t i, size_t len) {
  if (n < 2) throw std::invalid_argument("periodic resolution needs n >= 2");
  if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
  if (len < 2) throw std::invalid_argument("periodic resolution needs length >= 2");

  std::vector<std::string> names;
  for (size_t k = 1; k <= n; ++k) names.push_back("z" + std::to_string(k));
  RegistryPtr reg = VarRegistry::make(names);

  RatPoly full = RatPoly::constant(reg, Rat(1));
  RatPoly rest = RatPoly::constant(reg, Rat(1));
  for (size_t k = 0; k < n; ++k) {
    RatPoly zk = RatPoly::variable(reg, k, Rat(1));
    full *= zk;
    if (k + 1 != i) rest *= zk;
  }
  RatPoly zi = RatPoly::variable(reg, i - 1, Rat(1));

  QuotientRing ring(reg, {full});
  std::vector<FreeModuleMap> maps;
  for (size_t k = 0; k < len; ++k)
    maps.push_back(FreeModuleMap::scalar(k % 2 == 0 ? zi : rest));
  return ChainComplex(std::move(ring), std::move(maps));
}

/// The two-periodic rank-2 complex over k[x,y,w]/(y^2-xw) whose square
/// matrix factors the relation.
inline ChainComplex build_odp_resolution(size_t len) {
  if (len < 2) throw std::invalid_argument("factorization complex needs length >= 2");
  RegistryPtr reg = VarRegistry::make({"x", "y", "w"});
  RatPoly x = RatPoly::variable(reg, 0, Rat(1));
  RatPoly y = RatPoly::variable(reg, 1, Rat(1));
  RatPoly w = RatPoly::variable(reg, 2, Rat(1));
  QuotientRing ring(reg, {y * y - x * w});
  FreeModuleMap a;
  a.entries = {{y, w}, {-x, -y}};
  std::vector<FreeModuleMap> maps(len, a);
  return ChainComplex(std::move(ring), std::move(maps));
}

namespace detail {

struct SliceBasis {
  std::vector<Monomial> monomials;             // per generator copy
  std::map<std::vector<uint32_t>, size_t> at;  // monomial exponents -> index
  size_t rank = 1;
  size_t dim() const { return monomials.size() * rank; }
};

inline SliceBasis slice_basis(const QuotientRing& ring, const ModuleSpec& spec,
                              int64_t degree) {
  SliceBasis b;
  b.rank = spec.rank;
  if (degree < 0) return b;
  for (auto& m : ring.standard_monomials(static_cast<uint32_t>(degree))) {
    if (spec.cyclic_gen && !spec.cyclic_gen->divides(m)) continue;
    b.at.emplace(m.exps(), b.monomials.size());
    b.monomials.push_back(std::move(m));
  }
  return b;
}

/// Matrix of one map between degree slices; throws if an image escapes the
/// declared target basis, which would mean the complex data is inconsistent.
template <class K>
Matrix<K> slice_matrix(const QuotientRing& ring, const FreeModuleMap& map,
                       const SliceBasis& src, const SliceBasis& tgt,
                       const FieldCtx& ctx) {
  Matrix<K> out(tgt.dim(), src.dim());
  for (size_t s = 0; s < map.source_rank(); ++s)
    for (size_t c = 0; c < src.monomials.size(); ++c) {
      size_t col = s * src.monomials.size() + c;
      for (size_t r = 0; r < map.target_rank(); ++r) {
        RatPoly img = ring.nf(map.entries[r][s].times_term(src.monomials[c], Rat(1)));
        for (const auto& t : img.terms()) {
          auto it = tgt.at.find(t.mono.exps());
          if (it == tgt.at.end())
            throw std::logic_error("truncated homology: image escapes the module slice");
          out.at(r * tgt.monomials.size() + it->second, col) =
              FieldIO<K>::from_rat(t.coeff, ctx);
        }
      }
    }
  return out;
}

template <class K>
uint64_t homology_dim_impl(const ChainComplex& c, size_t position, uint32_t bound,
                           uint32_t window_top, const std::vector<int64_t>& edeg,
                           const FieldCtx& ctx) {
  (void)bound;
  const auto& ring = c.ring();
  uint64_t total = 0;
  for (uint32_t d = 0; d <= window_top; ++d) {
    SliceBasis here = slice_basis(ring, c.modules()[position], d);
    uint64_t dim_ker;
    if (position == c.length()) {
      dim_ker = here.dim();
    } else {
      SliceBasis tgt = slice_basis(ring, c.modules()[position + 1],
                                   static_cast<int64_t>(d) + edeg[position]);
      Matrix<K> m = slice_matrix<K>(ring, c.maps()[position], here, tgt, ctx);
      dim_ker = here.dim() - rank(std::move(m));
    }
    uint64_t dim_im = 0;
    if (position > 0) {
      int64_t src_deg = static_cast<int64_t>(d) - edeg[position - 1];
      if (src_deg >= 0) {
        SliceBasis src = slice_basis(ring, c.modules()[position - 1], src_deg);
        if (src.dim() > 0)
          dim_im = rank(slice_matrix<K>(ring, c.maps()[position - 1], src, here, ctx));
      }
    }
    if (dim_im > dim_ker)
      throw std::logic_error("truncated homology: image not contained in kernel");
    total += dim_ker - dim_im;
  }
  return total;
}

}  // namespace detail

/// Total homology dimension at `position`, summed over the slice degrees
/// 0..D-E where E is the largest entry degree in the complex; inside that
/// window the degree-D truncation loses nothing. Position p pairs the kernel
/// of maps[p] with the image of maps[p-1]; the ends treat the missing map as
/// zero.
inline uint64_t truncated_homology_dim(const ChainComplex& c, size_t position,
                                       uint32_t D, const FieldCtx& field) {
  if (position > c.length())
    throw std::out_of_range("truncated homology: position beyond the complex");

  std::vector<int64_t> edeg;
  int64_t emax = 0;
  for (const auto& m : c.maps()) {
    int64_t e = -1;
    for (const auto& row : m.entries)
      for (const auto& p : row) {
        if (p.is_zero_poly()) continue;
        if (!p.is_homogeneous())
          throw std::invalid_argument("truncated homology: entries must be homogeneous");
        int64_t d = p.total_degree();
        if (e >= 0 && d != e)
          throw std::invalid_argument("truncated homology: mixed entry degrees in one map");
        e = d;
      }
    if (e < 0) e = 0;  // zero map
    edeg.push_back(e);
    emax = std::max(emax, e);
  }
  if (static_cast<int64_t>(D) < emax + 1)
    throw std::invalid_argument("truncated homology: empty degree window (bound too small)");
  uint32_t window_top = static_cast<uint32_t>(static_cast<int64_t>(D) - emax);

  if (field.p == 0)
    return detail::homology_dim_impl<Rat>(c, position, D, window_top, edeg, field);
  return detail::homology_dim_impl<Zp>(c, position, D, window_top, edeg, field);
}

}  // namespace lgm

#endif
