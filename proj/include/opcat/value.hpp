#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace opcat {

// Immutable recursive term: the universal basepoint, an integer atom, or a tagged node.
// Ordering: Base < Atom < Node; nodes by tag, then arity, then children.
class Value {
 public:
  enum class Kind : std::uint8_t { Base = 0, Atom = 1, Node = 2 };

  Value();
  static Value base() { return Value(); }
  static Value atom(std::int64_t a);
  static Value node(std::uint32_t tag, std::vector<Value> kids);

  Kind kind() const;
  bool is_base() const { return kind() == Kind::Base; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_node() const { return kind() == Kind::Node; }
  std::int64_t atom_value() const;
  std::uint32_t tag() const;
  const std::vector<Value>& kids() const;
  std::size_t size() const { return kids().size(); }
  const Value& operator[](std::size_t i) const { return kids()[i]; }
  std::size_t hash() const;
  std::size_t weight() const;  // node count

  std::string str() const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

  struct Rep;

 private:
  explicit Value(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
  std::shared_ptr<const Rep> rep_;
};

namespace tag {
constexpr std::uint32_t Word = 1;   // free monoid word
constexpr std::uint32_t Bag = 2;    // multiset, kids sorted
constexpr std::uint32_t Pair = 3;   // (g, x)
constexpr std::uint32_t Op = 4;     // operad term: arity, element, letters
constexpr std::uint32_t Tuple = 5;  // cartesian tuple
constexpr std::uint32_t Co = 6;     // category-of-operators class (k, a, x)
constexpr std::uint32_t Cell = 7;   // generic labelled cell
}  // namespace tag

const char* tag_name(std::uint32_t t);

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

// Finite set of values in increasing order with an index.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<Value> elems);

  std::size_t size() const { return elems_.size(); }
  const Value& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<Value>& elems() const { return elems_; }
  std::optional<std::size_t> find(const Value& v) const;
  std::size_t index(const Value& v) const;  // throws ErrorCode::Domain
  bool contains(const Value& v) const { return index_.count(v) != 0; }

 private:
  std::vector<Value> elems_;
  std::unordered_map<Value, std::size_t, ValueHash> index_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;
inline CarrierPtr make_carrier(std::vector<Value> elems) { return std::make_shared<const Carrier>(std::move(elems)); }

// Atoms 1..n, optionally preceded by the basepoint.
std::vector<Value> atoms(std::size_t n, bool based);

}  // namespace opcat

template <>
struct std::hash<opcat::Value> {
  std::size_t operator()(const opcat::Value& v) const { return v.hash(); }
};
