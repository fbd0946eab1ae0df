#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace arrlik {

// Variable kinds drive the bigrading: deg x = (1,0), deg s = (0,1).
// Aux variables are internal (elimination helpers) and carry no bidegree.
enum class VarKind { X, S, Aux };

struct Bidegree {
  int dx = 0;
  int ds = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  Bidegree operator+(const Bidegree& o) const { return {dx + o.dx, ds + o.ds}; }
  std::string to_string() const;
};

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

// An ordered list of named variables with kinds. Immutable after
// construction; polynomials hold a shared_ptr and two polynomials are
// compatible iff they point at the same context.
class RingContext {
 public:
  static Ring make(std::vector<std::string> x_names);
  static Ring make(std::vector<std::string> x_names, std::vector<std::string> s_names);

  std::size_t size() const { return names_.size(); }
  std::size_t n_x() const { return n_x_; }
  std::size_t n_s() const { return n_s_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  VarKind kind(std::size_t i) const { return kinds_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(const std::string& name) const;

  // x-variable names only (prefix of names()).
  std::vector<std::string> x_names() const;
  std::vector<std::string> s_names() const;

 private:
  RingContext(std::vector<std::string> names, std::vector<VarKind> kinds);
  friend Ring extend_with_aux(const Ring&, const std::string&);

  std::vector<std::string> names_;
  std::vector<VarKind> kinds_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t n_x_ = 0;
  std::size_t n_s_ = 0;
};

// R -> R[s]: x-variables kept in place, s-variables appended.
Ring extend_with_s(const Ring& r, std::vector<std::string> s_names);
// Appends one Aux variable at the end (used by elimination tricks).
Ring extend_with_aux(const Ring& r, const std::string& aux_name);

}  // namespace arrlik
