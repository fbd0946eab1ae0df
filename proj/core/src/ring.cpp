#include "arrlik/ring.hpp"

#include <stdexcept>

#include "arrlik/rational.hpp"

namespace arrlik {

std::string Bidegree::to_string() const {
  return "(" + std::to_string(dx) + "," + std::to_string(ds) + ")";
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

RingContext::RingContext(std::vector<std::string> names, std::vector<VarKind> kinds)
    : names_(std::move(names)), kinds_(std::move(kinds)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    auto [it, fresh] = index_.emplace(names_[i], i);
    if (!fresh) throw std::invalid_argument("duplicate variable name: " + names_[i]);
    if (kinds_[i] == VarKind::X) ++n_x_;
    if (kinds_[i] == VarKind::S) ++n_s_;
  }
}

Ring RingContext::make(std::vector<std::string> x_names) {
  return make(std::move(x_names), {});
}

Ring RingContext::make(std::vector<std::string> x_names, std::vector<std::string> s_names) {
  std::vector<std::string> names = std::move(x_names);
  std::vector<VarKind> kinds(names.size(), VarKind::X);
  for (auto& s : s_names) {
    names.push_back(std::move(s));
    kinds.push_back(VarKind::S);
  }
  return Ring(new RingContext(std::move(names), std::move(kinds)));
}

std::optional<std::size_t> RingContext::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> RingContext::x_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (kinds_[i] == VarKind::X) out.push_back(names_[i]);
  return out;
}

std::vector<std::string> RingContext::s_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (kinds_[i] == VarKind::S) out.push_back(names_[i]);
  return out;
}

Ring extend_with_s(const Ring& r, std::vector<std::string> s_names) {
  if (r->n_s() != 0) throw std::invalid_argument("ring already has s-variables");
  return RingContext::make(r->x_names(), std::move(s_names));
}

Ring extend_with_aux(const Ring& r, const std::string& aux_name) {
  std::vector<std::string> names = r->names();
  std::vector<VarKind> kinds;
  kinds.reserve(names.size() + 1);
  for (std::size_t i = 0; i < names.size(); ++i) kinds.push_back(r->kind(i));
  names.push_back(aux_name);
  kinds.push_back(VarKind::Aux);
  return Ring(new RingContext(std::move(names), std::move(kinds)));
}

}  // namespace arrlik
