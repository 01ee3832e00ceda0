#include "revcat/label.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace revcat::cat {

Label Label::unit() {
  static Label u{std::make_shared<Node>(Kind::Unit, "")};
  return u;
}

Label Label::atom(std::string name) {
  return Label{std::make_shared<Node>(Kind::Atom, std::move(name))};
}

Label Label::left(Label inner) {
  return Label{std::make_shared<Node>(Kind::Left, std::move(inner))};
}

Label Label::right(Label inner) {
  return Label{std::make_shared<Node>(Kind::Right, std::move(inner))};
}

Label Label::pair(Label first, Label second) {
  return Label{std::make_shared<Node>(Kind::Pair, std::move(first), std::move(second))};
}

int Label::compare(const Label& other) const {
  if (node_ == other.node_) return 0;
  if (kind() != other.kind()) return kind() < other.kind() ? -1 : 1;
  switch (kind()) {
    case Kind::Unit:
      return 0;
    case Kind::Atom:
      return atomName().compare(other.atomName());
    case Kind::Left:
    case Kind::Right:
      return inner().compare(other.inner());
    case Kind::Pair: {
      int c = first().compare(other.first());
      return c != 0 ? c : second().compare(other.second());
    }
  }
  return 0;
}

std::string Label::str() const {
  switch (kind()) {
    case Kind::Unit:
      return "*";
    case Kind::Atom:
      return atomName();
    case Kind::Left:
      return "L(" + inner().str() + ")";
    case Kind::Right:
      return "R(" + inner().str() + ")";
    case Kind::Pair:
      return "(" + first().str() + "," + second().str() + ")";
  }
  return "?";
}

namespace {

std::optional<Label> parseLabelRec(std::string_view& s);

void skipSpace(std::string_view& s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

bool eat(std::string_view& s, char c) {
  skipSpace(s);
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

std::optional<Label> parseLabelRec(std::string_view& s) {
  skipSpace(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '*') {
    s.remove_prefix(1);
    return Label::unit();
  }
  if (s.starts_with("L(") || s.starts_with("R(")) {
    bool isLeft = s.front() == 'L';
    s.remove_prefix(2);
    auto inner = parseLabelRec(s);
    if (!inner || !eat(s, ')')) return std::nullopt;
    return isLeft ? Label::left(*inner) : Label::right(*inner);
  }
  if (s.front() == '(') {
    s.remove_prefix(1);
    auto a = parseLabelRec(s);
    if (!a || !eat(s, ',')) return std::nullopt;
    auto b = parseLabelRec(s);
    if (!b || !eat(s, ')')) return std::nullopt;
    return Label::pair(*a, *b);
  }
  size_t n = 0;
  while (n < s.size() && (std::isalnum(static_cast<unsigned char>(s[n])) || s[n] == '_')) ++n;
  if (n == 0) return std::nullopt;
  Label out = Label::atom(std::string(s.substr(0, n)));
  s.remove_prefix(n);
  return out;
}

}  // namespace

std::optional<Label> Label::parse(std::string_view text) {
  auto out = parseLabelRec(text);
  skipSpace(text);
  if (!out || !text.empty()) return std::nullopt;
  return out;
}

Obj::Obj(std::vector<Label> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  for (size_t i = 1; i < elems_.size(); ++i)
    if (elems_[i - 1] == elems_[i]) throw std::invalid_argument("Obj: duplicate label");
}

Obj Obj::atoms(const std::vector<std::string>& names) {
  std::vector<Label> elems;
  elems.reserve(names.size());
  for (const auto& n : names) elems.push_back(Label::atom(n));
  return Obj(std::move(elems));
}

bool Obj::contains(const Label& l) const {
  return std::binary_search(elems_.begin(), elems_.end(), l);
}

bool Obj::operator==(const Obj& other) const {
  if (elems_.size() != other.elems_.size()) return false;
  for (size_t i = 0; i < elems_.size(); ++i)
    if (!(elems_[i] == other.elems_[i])) return false;
  return true;
}

bool Obj::operator<(const Obj& other) const {
  return std::lexicographical_compare(
      elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
      [](const Label& a, const Label& b) { return a < b; });
}

std::string Obj::str() const {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) out << ", ";
    out << elems_[i].str();
  }
  out << "}";
  return out.str();
}

std::optional<Obj> Obj::parse(std::string_view text) {
  skipSpace(text);
  if (text == "1") return unitObject();
  if (text.empty() || text.front() != '{' || text.back() != '}') return std::nullopt;
  text.remove_prefix(1);
  text.remove_suffix(1);
  std::vector<Label> elems;
  skipSpace(text);
  if (text.empty()) return Obj{};
  for (;;) {
    auto l = parseLabelRec(text);
    if (!l) return std::nullopt;
    elems.push_back(*l);
    skipSpace(text);
    if (text.empty()) break;
    if (!eat(text, ',')) return std::nullopt;
  }
  return Obj(std::move(elems));
}

Obj tensorOfObjects(const Obj& a, const Obj& b) {
  std::vector<Label> elems;
  elems.reserve(a.size() * b.size());
  for (const auto& x : a.elems())
    for (const auto& y : b.elems()) elems.push_back(Label::pair(x, y));
  return Obj(std::move(elems));
}

Obj sumOfObjects(const Obj& a, const Obj& b) {
  std::vector<Label> elems;
  elems.reserve(a.size() + b.size());
  for (const auto& x : a.elems()) elems.push_back(Label::left(x));
  for (const auto& y : b.elems()) elems.push_back(Label::right(y));
  return Obj(std::move(elems));
}

Obj unitObject() {
  return Obj({Label::unit()});
}

}  // namespace revcat::cat
