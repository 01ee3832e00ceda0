#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

// Structural labels for the elements of finite objects. Labels are trees:
// the unit point, named atoms (enum constants / carrier elements), left and
// right injection tags, and pairs. Objects of the concrete categories are
// finite label sets, so tensor and sum of objects are pair- and tag-labeled
// by construction.

namespace revcat::cat {

class Label {
 public:
  enum class Kind : uint8_t { Unit, Atom, Left, Right, Pair };

  static Label unit();
  static Label atom(std::string name);
  static Label left(Label inner);
  static Label right(Label inner);
  static Label pair(Label first, Label second);

  Kind kind() const;
  const std::string& atomName() const;
  const Label& inner() const;   // Left / Right
  const Label& first() const;   // Pair
  const Label& second() const;  // Pair

  bool operator==(const Label& other) const { return compare(other) == 0; }
  bool operator<(const Label& other) const { return compare(other) < 0; }
  int compare(const Label& other) const;

  // "*", "a", "L(x)", "R(x)", "(x,y)"
  std::string str() const;
  static std::optional<Label> parse(std::string_view text);

 private:
  struct Node;
  Label() = default;  // only used while building nodes
  explicit Label(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Label::Node {
  Kind kind;
  std::string name;
  Label a, b;
  Node(Kind k, std::string n) : kind(k), name(std::move(n)) {}
  Node(Kind k, Label x) : kind(k), a(std::move(x)) {}
  Node(Kind k, Label x, Label y) : kind(k), a(std::move(x)), b(std::move(y)) {}
};

inline Label::Kind Label::kind() const { return node_->kind; }
inline const std::string& Label::atomName() const { return node_->name; }
inline const Label& Label::inner() const { return node_->a; }
inline const Label& Label::first() const { return node_->a; }
inline const Label& Label::second() const { return node_->b; }

// A finite object: sorted, duplicate-free label set.
class Obj {
 public:
  Obj() = default;
  explicit Obj(std::vector<Label> elems);
  static Obj atoms(const std::vector<std::string>& names);

  const std::vector<Label>& elems() const { return elems_; }
  bool contains(const Label& l) const;
  size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  bool operator==(const Obj& other) const;
  bool operator<(const Obj& other) const;

  std::string str() const;  // "{a, b}"
  static std::optional<Obj> parse(std::string_view text);

 private:
  std::vector<Label> elems_;
};

Obj tensorOfObjects(const Obj& a, const Obj& b);  // pair labels
Obj sumOfObjects(const Obj& a, const Obj& b);     // Left/Right tagged
Obj unitObject();                                 // { * }

}  // namespace revcat::cat
