#include "doxa/proposition.hpp"

#include <algorithm>
#include <string>

#include "doxa/error.hpp"

namespace doxa {

Proposition Proposition::of(std::size_t universe,
                            std::initializer_list<std::size_t> indices) {
  return of(universe, std::vector<std::size_t>(indices));
}

Proposition Proposition::of(std::size_t universe,
                            const std::vector<std::size_t>& indices) {
  Proposition p(universe);
  for (auto i : indices) {
    if (i >= universe) {
      throw Error(ErrorCode::InvalidArgument,
                  "world index " + std::to_string(i) + " outside universe of " +
                      std::to_string(universe));
    }
    p.insert(i);
  }
  return p;
}

std::size_t Proposition::count() const {
  return static_cast<std::size_t>(
      std::count(members_.begin(), members_.end(), 1));
}

std::vector<std::size_t> Proposition::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i]) out.push_back(i);
  }
  return out;
}

void Proposition::require_same_universe(const Proposition& other) const {
  if (universe() != other.universe()) {
    throw Error(ErrorCode::InvalidArgument,
                "propositions over different world sets");
  }
}

bool Proposition::subset_of(const Proposition& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] && !other.members_[i]) return false;
  }
  return true;
}

bool Proposition::intersects(const Proposition& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] && other.members_[i]) return true;
  }
  return false;
}

Proposition Proposition::operator&(const Proposition& other) const {
  require_same_universe(other);
  Proposition out(universe());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    out.members_[i] = members_[i] & other.members_[i];
  }
  return out;
}

Proposition Proposition::operator|(const Proposition& other) const {
  require_same_universe(other);
  Proposition out(universe());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    out.members_[i] = members_[i] | other.members_[i];
  }
  return out;
}

Proposition Proposition::operator~() const {
  Proposition out(universe());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    out.members_[i] = members_[i] ? 0 : 1;
  }
  return out;
}

Proposition Proposition::operator-(const Proposition& other) const {
  return *this & ~other;
}

}  // namespace doxa
