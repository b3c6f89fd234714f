#include "lattkit/embedding.hpp"

#include <stdexcept>
#include <string>

namespace lattkit {

Embedding::Embedding(FiniteLattice source, FiniteLattice target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  const int n = source_.size();
  if (static_cast<int>(map_.size()) != n)
    throw std::invalid_argument("embedding map size does not match source");
  std::vector<bool> seen(target_.size(), false);
  for (int i = 0; i < n; ++i) {
    int t = map_[i];
    if (t < 0 || t >= target_.size())
      throw std::invalid_argument("embedding map value out of range");
    if (seen[t]) throw std::invalid_argument("embedding map is not injective");
    seen[t] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      if (map_[source_.meet(a, b)] != target_.meet(map_[a], map_[b]))
        throw std::invalid_argument("embedding does not preserve meet at (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
      if (map_[source_.join(a, b)] != target_.join(map_[a], map_[b]))
        throw std::invalid_argument("embedding does not preserve join at (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
    }
}

ElementSubset Embedding::image() const {
  ElementSubset s(target_.size());
  for (int t : map_) s.add(t);
  return s;
}

}  // namespace lattkit
