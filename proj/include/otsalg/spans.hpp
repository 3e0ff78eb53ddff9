#pragma once

// Spans of finite sets: composition by pullback, tensor by product.

#include <algorithm>
#include <utility>
#include <vector>

#include "otsalg/kernel.hpp"

namespace otsalg {

enum class Variance { Covariant, Contravariant };

/// A span dom <- head -> cod.
class Span {
 public:
  Span() = default;
  Span(FinFunction left, FinFunction right) : left_(std::move(left)), right_(std::move(right)) {
    if (!(left_.dom() == right_.dom())) throw InvalidArgument("span legs must share their domain");
  }

  const Object& head() const { return left_.dom(); }
  const Object& dom() const { return left_.cod(); }
  const Object& cod() const { return right_.cod(); }
  const FinFunction& left() const { return left_; }
  const FinFunction& right() const { return right_; }
  std::size_t size() const { return head().size(); }

  static Span identity(const Object& a) { return Span(FinFunction::identity(a), FinFunction::identity(a)); }

  static Span swap(const Object& a, const Object& b) {
    auto ab = tensor(a, b);
    return Span(FinFunction::identity(ab), swap_map(a, b));
  }

  /// Covariant lift A <- A -> B, contravariant lift B <- A -> A.
  static Span lift(const FinFunction& f, Variance v = Variance::Covariant) {
    if (v == Variance::Covariant) return Span(FinFunction::identity(f.dom()), f);
    return Span(f, FinFunction::identity(f.dom()));
  }

  static Span copy(const Object& a) { return Span(FinFunction::identity(a), diagonal(a)); }
  static Span cocopy(const Object& a) { return Span(diagonal(a), FinFunction::identity(a)); }
  static Span discard(const Object& a) { return Span(FinFunction::identity(a), terminal_map(a)); }
  static Span codiscard(const Object& a) { return Span(terminal_map(a), FinFunction::identity(a)); }
  static Span cup(const Object& a) { return Span(terminal_map(a), diagonal(a)); }
  static Span cap(const Object& a) { return Span(diagonal(a), terminal_map(a)); }

 private:
  FinFunction left_;
  FinFunction right_;
};

inline Span compose(const Span& f, const Span& g) {
  if (!(f.cod() == g.dom()))
    throw BoundaryMismatch("span " + f.cod().describe() + " does not meet " + g.dom().describe());
  auto pb = pullback(f.right(), g.left());
  return Span(compose(pb.p1, f.left()), compose(pb.p2, g.right()));
}

inline Span tensor(const Span& f, const Span& g) {
  return Span(tensor(f.left(), g.left()), tensor(f.right(), g.right()));
}

/// Multiset of (left, right) leg values, sorted.
inline std::vector<std::pair<std::size_t, std::size_t>> normal_form(const Span& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) out.emplace_back(s.left()(x), s.right()(x));
  std::sort(out.begin(), out.end());
  return out;
}

/// Equality up to isomorphism of heads.
inline bool span_equal(const Span& a, const Span& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod()))
    throw BoundaryMismatch("comparing spans " + a.dom().describe() + " -> " + a.cod().describe() + " and " +
                           b.dom().describe() + " -> " + b.cod().describe());
  if (a.size() != b.size()) return false;
  return normal_form(a) == normal_form(b);
}

/// Trace over the leading state factors s of f : s ⊗ A -> s ⊗ B, built from cup and cap.
inline Span span_trace(const Object& s, const Span& f) {
  auto a = strip_prefix(f.dom(), s);
  auto b = strip_prefix(f.cod(), s);
  if (!a || !b)
    throw BoundaryMismatch("trace over " + s.describe() + " of a span " + f.dom().describe() + " -> " +
                           f.cod().describe());
  auto open = tensor(Span::cup(s), Span::identity(*a));
  auto body = tensor(Span::identity(s), f);
  auto close = tensor(Span::cap(s), Span::identity(*b));
  return compose(compose(open, body), close);
}

}  // namespace otsalg
