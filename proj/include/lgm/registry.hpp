#ifndef LGM_REGISTRY_HPP
#define LGM_REGISTRY_HPP

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgm {

/// Immutable, ordered list of variable names. Every polynomial holds a
/// shared_ptr to the registry it was built over; exponent vectors are
/// positional against this list. Extension never mutates: it returns a new
/// registry of which the old one is a positional prefix, so exponent vectors
/// embed by zero-padding.
class VarRegistry {
 public:
  using Ptr = std::shared_ptr<const VarRegistry>;

  static Ptr make(std::vector<std::string> names) {
    return Ptr(new VarRegistry(std::move(names)));
  }

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<size_t> index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  size_t index_checked(const std::string& name) const {
    auto i = index(name);
    if (!i) throw std::invalid_argument("unknown variable '" + name + "'");
    return *i;
  }

  bool has(const std::string& name) const { return index_.count(name) > 0; }

  /// New registry with `extra` appended; *this stays a positional prefix.
  Ptr extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> all = names_;
    all.insert(all.end(), extra.begin(), extra.end());
    return make(std::move(all));
  }

  bool same_names(const VarRegistry& other) const {
    return names_ == other.names_;
  }

 private:
  explicit VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i) {
      validate(names_[i]);
      if (!index_.emplace(names_[i], i).second)
        throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
    }
  }

  static void validate(const std::string& n) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!std::isalpha(static_cast<unsigned char>(n[0])) && n[0] != '_')
      throw std::invalid_argument("bad variable name '" + n + "'");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw std::invalid_argument("bad variable name '" + n + "'");
  }

  std::vector<std::string> names_;
  std::map<std::string, size_t> index_;
};

using RegistryPtr = VarRegistry::Ptr;

inline bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  if (a == b) return true;
  return a && b && a->same_names(*b);
}

inline void require_same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  if (!same_registry(a, b))
    throw std::invalid_argument("operands built over different registries");
}

}  // namespace lgm

#endif
