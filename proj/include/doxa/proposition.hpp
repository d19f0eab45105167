#ifndef DOXA_PROPOSITION_HPP
#define DOXA_PROPOSITION_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace doxa {

/// A set of worlds, identified by their index into a frame's world list.
/// The universe size is fixed at construction; set operations require
/// equal universes.
class Proposition {
 public:
  Proposition() = default;
  explicit Proposition(std::size_t universe, bool filled = false)
      : members_(universe, filled ? 1 : 0) {}

  static Proposition none(std::size_t universe) { return Proposition(universe); }
  static Proposition all(std::size_t universe) {
    return Proposition(universe, true);
  }
  static Proposition of(std::size_t universe,
                        std::initializer_list<std::size_t> indices);
  static Proposition of(std::size_t universe,
                        const std::vector<std::size_t>& indices);

  std::size_t universe() const { return members_.size(); }
  bool contains(std::size_t i) const { return members_.at(i) != 0; }
  void insert(std::size_t i) { members_.at(i) = 1; }
  void erase(std::size_t i) { members_.at(i) = 0; }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool is_full() const { return count() == universe(); }
  std::vector<std::size_t> indices() const;

  bool subset_of(const Proposition& other) const;
  bool intersects(const Proposition& other) const;

  Proposition operator&(const Proposition& other) const;
  Proposition operator|(const Proposition& other) const;
  Proposition operator~() const;
  /// Set difference.
  Proposition operator-(const Proposition& other) const;

  bool operator==(const Proposition&) const = default;

 private:
  void require_same_universe(const Proposition& other) const;

  std::vector<unsigned char> members_;
};

}  // namespace doxa

#endif  // DOXA_PROPOSITION_HPP
