#pragma once

// Cospans of finite sets. Boundary objects are read as disjoint unions of
// their factors, so the tensor of objects is the coproduct.

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "otsalg/kernel.hpp"

namespace otsalg {

/// A cospan dom -> apex <- cod, with legs defined on sum_object(dom) and sum_object(cod).
class Cospan {
 public:
  Cospan() = default;
  Cospan(Object dom, Object cod, FinFunction left, FinFunction right)
      : dom_(std::move(dom)), cod_(std::move(cod)), left_(std::move(left)), right_(std::move(right)) {
    if (!(left_.cod() == right_.cod())) throw InvalidArgument("cospan legs must share their codomain");
    if (left_.dom().size() != sum_object(dom_).size() || right_.dom().size() != sum_object(cod_).size())
      throw InvalidArgument("cospan legs do not match the boundary sizes");
  }

  const Object& dom() const { return dom_; }
  const Object& cod() const { return cod_; }
  const Object& apex() const { return left_.cod(); }
  const FinFunction& left() const { return left_; }
  const FinFunction& right() const { return right_; }

  static Cospan identity(const Object& a) {
    auto s = sum_object(a);
    return Cospan(a, a, FinFunction::identity(s), FinFunction::identity(s));
  }

  static Cospan swap(const Object& a, const Object& b) {
    auto ab = tensor(a, b), ba = tensor(b, a);
    auto s = sum_object(ab);
    const std::size_t na = sum_object(a).size(), nb = sum_object(b).size();
    std::vector<std::size_t> r(na + nb);
    for (std::size_t i = 0; i < nb; ++i) r[i] = na + i;
    for (std::size_t i = 0; i < na; ++i) r[nb + i] = i;
    return Cospan(ab, ba, FinFunction::identity(s), FinFunction(sum_object(ba), s, std::move(r)));
  }

  /// a -> a ⊗ a, joining both copies to the same points.
  static Cospan copy(const Object& a) {
    auto s = sum_object(a);
    return Cospan(a, tensor(a, a), FinFunction::identity(s), codiagonal(a));
  }
  static Cospan cocopy(const Object& a) {
    auto s = sum_object(a);
    return Cospan(tensor(a, a), a, codiagonal(a), FinFunction::identity(s));
  }
  static Cospan discard(const Object& a) {
    auto s = sum_object(a);
    return Cospan(a, Object::unit(), FinFunction::identity(s), initial_map(empty_object(), s));
  }
  static Cospan codiscard(const Object& a) {
    auto s = sum_object(a);
    return Cospan(Object::unit(), a, initial_map(empty_object(), s), FinFunction::identity(s));
  }
  static Cospan cup(const Object& a) {
    auto s = sum_object(a);
    return Cospan(Object::unit(), tensor(a, a), initial_map(empty_object(), s), codiagonal(a));
  }
  static Cospan cap(const Object& a) {
    auto s = sum_object(a);
    return Cospan(tensor(a, a), Object::unit(), codiagonal(a), initial_map(empty_object(), s));
  }

  /// Folding map sum(a ⊗ a) -> sum(a).
  static FinFunction codiagonal(const Object& a) {
    auto s = sum_object(a);
    std::vector<std::size_t> t(2 * s.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i % s.size();
    return FinFunction(sum_object(tensor(a, a)), s, std::move(t));
  }

 private:
  Object dom_;
  Object cod_;
  FinFunction left_;
  FinFunction right_;
};

inline Cospan compose(const Cospan& f, const Cospan& g) {
  if (!(f.cod() == g.dom()))
    throw BoundaryMismatch("cospan " + f.cod().describe() + " does not meet " + g.dom().describe());
  auto po = pushout(f.right(), g.left());
  return Cospan(f.dom(), g.cod(), compose(f.left(), po.q1), compose(g.right(), po.q2));
}

inline Cospan tensor(const Cospan& f, const Cospan& g) {
  auto apex = coproduct(f.apex(), g.apex()).sum;
  const std::size_t off = f.apex().size();
  auto join = [&](const FinFunction& a, const FinFunction& b, const Object& boundary) {
    std::vector<std::size_t> t = a.table();
    for (auto v : b.table()) t.push_back(v + off);
    return FinFunction(sum_object(boundary), apex, std::move(t));
  };
  auto dom = tensor(f.dom(), g.dom());
  auto cod = tensor(f.cod(), g.cod());
  return Cospan(dom, cod, join(f.left(), g.left(), dom), join(f.right(), g.right(), cod));
}

/// Apex bijection commuting with both legs, if one exists.
inline std::optional<std::vector<std::size_t>> cospan_iso(const Cospan& a, const Cospan& b) {
  if (a.apex().size() != b.apex().size()) return std::nullopt;
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> phi(a.apex().size(), none), back(b.apex().size(), none);
  auto force = [&](const FinFunction& la, const FinFunction& lb) {
    for (std::size_t i = 0; i < la.dom().size(); ++i) {
      std::size_t x = la(i), y = lb(i);
      if (phi[x] == none && back[y] == none) {
        phi[x] = y;
        back[y] = x;
      } else if (phi[x] != y || back[y] != x) {
        return false;
      }
    }
    return true;
  };
  if (!force(a.left(), b.left()) || !force(a.right(), b.right())) return std::nullopt;
  std::size_t next = 0;
  for (auto& p : phi) {
    if (p != none) continue;
    while (back[next] != none) ++next;
    p = next;
    back[next] = 0;
  }
  return phi;
}

inline bool cospan_equal(const Cospan& a, const Cospan& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod()))
    throw BoundaryMismatch("comparing cospans " + a.dom().describe() + " -> " + a.cod().describe() + " and " +
                           b.dom().describe() + " -> " + b.cod().describe());
  return cospan_iso(a, b).has_value();
}

inline Cospan cospan_trace(const Object& s, const Cospan& f) {
  auto a = strip_prefix(f.dom(), s);
  auto b = strip_prefix(f.cod(), s);
  if (!a || !b)
    throw BoundaryMismatch("trace over " + s.describe() + " of a cospan " + f.dom().describe() + " -> " +
                           f.cod().describe());
  auto open = tensor(Cospan::cup(s), Cospan::identity(*a));
  auto body = tensor(Cospan::identity(s), f);
  auto close = tensor(Cospan::cap(s), Cospan::identity(*b));
  return compose(compose(open, body), close);
}

}  // namespace otsalg
