#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace aniso {

/// The closure grew past its size cap (an infinite or unexpectedly large group).
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Breadth-first closure of `gens` under right multiplication, starting from
/// `id`. For a finite group this is the generated subgroup; elements come out
/// in BFS order with the identity first. `accept` may reject an element (by
/// returning false) to abort early, which raises CapExceeded.
template <typename Elem, typename Mul, typename Key, typename Accept>
std::vector<Elem> closeUnder(const std::vector<Elem>& gens, const Elem& id, Mul&& mul, Key&& key,
                             std::size_t cap, Accept&& accept) {
  std::vector<Elem> elems{id};
  std::unordered_map<std::string, std::size_t> index{{key(id), 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Elem& g : gens) {
      Elem y = mul(elems[i], g);
      std::string k = key(y);
      if (index.count(k) != 0) continue;
      if (!accept(y)) throw CapExceeded("closure produced an element of infinite order");
      if (elems.size() >= cap) throw CapExceeded("closure exceeded " + std::to_string(cap) + " elements");
      index.emplace(std::move(k), elems.size());
      elems.push_back(std::move(y));
    }
  }
  return elems;
}

template <typename Elem, typename Mul, typename Key>
std::vector<Elem> closeUnder(const std::vector<Elem>& gens, const Elem& id, Mul&& mul, Key&& key, std::size_t cap) {
  return closeUnder(gens, id, mul, key, cap, [](const Elem&) { return true; });
}

}  // namespace aniso
