#include "opcat/value.hpp"

#include <algorithm>
#include <functional>

#include "opcat/error.hpp"

namespace opcat {

struct Value::Rep {
  Kind kind = Kind::Base;
  std::int64_t atom = 0;
  std::uint32_t tag = 0;
  std::vector<Value> kids;
  std::size_t hash = 0;
  std::size_t weight = 1;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

const std::shared_ptr<const Value::Rep>& base_rep() {
  static const std::shared_ptr<const Value::Rep> r = [] {
    auto p = std::make_shared<Value::Rep>();
    p->hash = 0x51ed270b;
    return std::shared_ptr<const Value::Rep>(p);
  }();
  return r;
}

const std::vector<Value>& no_kids() {
  static const std::vector<Value> v;
  return v;
}

}  // namespace

Value::Value() : rep_(base_rep()) {}

Value Value::atom(std::int64_t a) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Atom;
  r->atom = a;
  r->hash = mix(0xa70d, std::hash<std::int64_t>{}(a));
  return Value(std::shared_ptr<const Rep>(r));
}

Value Value::node(std::uint32_t t, std::vector<Value> kids) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Node;
  r->tag = t;
  std::size_t h = mix(0x90de, t);
  std::size_t w = 1;
  for (const auto& k : kids) {
    h = mix(h, k.hash());
    w += k.weight();
  }
  r->hash = h;
  r->weight = w;
  r->kids = std::move(kids);
  return Value(std::shared_ptr<const Rep>(r));
}

Value::Kind Value::kind() const { return rep_->kind; }
std::int64_t Value::atom_value() const { return rep_->atom; }
std::uint32_t Value::tag() const { return rep_->tag; }
const std::vector<Value>& Value::kids() const { return rep_->kind == Kind::Node ? rep_->kids : no_kids(); }
std::size_t Value::hash() const { return rep_->hash; }
std::size_t Value::weight() const { return rep_->weight; }

bool operator==(const Value& a, const Value& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.rep_->hash != b.rep_->hash || a.rep_->kind != b.rep_->kind) return false;
  switch (a.rep_->kind) {
    case Value::Kind::Base: return true;
    case Value::Kind::Atom: return a.rep_->atom == b.rep_->atom;
    case Value::Kind::Node: return a.rep_->tag == b.rep_->tag && a.rep_->kids == b.rep_->kids;
  }
  return false;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (auto c = a.rep_->kind <=> b.rep_->kind; c != 0) return c;
  switch (a.rep_->kind) {
    case Value::Kind::Base: return std::strong_ordering::equal;
    case Value::Kind::Atom: return a.rep_->atom <=> b.rep_->atom;
    case Value::Kind::Node: break;
  }
  if (auto c = a.rep_->tag <=> b.rep_->tag; c != 0) return c;
  if (auto c = a.rep_->kids.size() <=> b.rep_->kids.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.rep_->kids.size(); ++i)
    if (auto c = a.rep_->kids[i] <=> b.rep_->kids[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

const char* tag_name(std::uint32_t t) {
  switch (t) {
    case tag::Word: return "w";
    case tag::Bag: return "b";
    case tag::Pair: return "p";
    case tag::Op: return "op";
    case tag::Tuple: return "t";
    case tag::Co: return "co";
    case tag::Cell: return "c";
  }
  return "n";
}

std::string Value::str() const {
  switch (kind()) {
    case Kind::Base: return "*";
    case Kind::Atom: return std::to_string(atom_value());
    case Kind::Node: break;
  }
  std::string s = tag_name(tag());
  s += "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += kids()[i].str();
  }
  return s + ")";
}

Carrier::Carrier(std::vector<Value> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  index_.reserve(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
}

std::optional<std::size_t> Carrier::find(const Value& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Carrier::index(const Value& v) const {
  auto it = index_.find(v);
  if (!(it != index_.end())) fail(ErrorCode::Domain, "value " + v.str() + " is not in the carrier");
  return it->second;
}

std::vector<Value> atoms(std::size_t n, bool based) {
  std::vector<Value> v;
  if (based) v.push_back(Value::base());
  for (std::size_t i = 1; i <= n; ++i) v.push_back(Value::atom(static_cast<std::int64_t>(i)));
  return v;
}

}  // namespace opcat
