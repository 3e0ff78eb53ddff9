#pragma once

// Finite alphabets, strict list-of-factors objects and finite functions.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "otsalg/error.hpp"

namespace otsalg {

/// Renames repeated labels by appending "#k" so that every label is unique.
inline std::vector<std::string> make_unique_labels(std::vector<std::string> labels) {
  std::map<std::string, std::size_t> count;
  for (const auto& l : labels) ++count[l];
  std::map<std::string, std::size_t> used;
  for (const auto& l : labels) used[l] = 1;
  std::map<std::string, std::size_t> seen;
  for (auto& l : labels) {
    if (count[l] < 2) continue;
    const std::string base = l;
    std::size_t k = seen[base]++;
    if (k == 0) continue;
    std::string candidate;
    do {
      candidate = base + "#" + std::to_string(k++);
    } while (used.count(candidate) != 0);
    used[candidate] = 1;
    l = candidate;
  }
  return labels;
}

class Alphabet {
 public:
  Alphabet() : symbols_(std::make_shared<const std::vector<std::string>>()) {}

  Alphabet(std::string name, std::vector<std::string> symbols) : name_(std::move(name)) {
    std::vector<std::string> sorted = symbols;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidArgument("alphabet '" + name_ + "' has repeated symbols");
    symbols_ = std::make_shared<const std::vector<std::string>>(std::move(symbols));
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& symbols() const { return *symbols_; }
  std::size_t size() const { return symbols_->size(); }
  const std::string& symbol(std::size_t i) const { return symbols_->at(i); }

  std::optional<std::size_t> index_of(std::string_view s) const {
    for (std::size_t i = 0; i < symbols_->size(); ++i)
      if ((*symbols_)[i] == s) return i;
    return std::nullopt;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.name_ == b.name_ && (a.symbols_ == b.symbols_ || *a.symbols_ == *b.symbols_);
  }

 private:
  std::string name_;
  std::shared_ptr<const std::vector<std::string>> symbols_;
};

/// An object is an ordered list of alphabets. Its carrier is the set of
/// tuples, enumerated lexicographically with the first factor most significant.
/// The empty list is the unit, with the single element ().
class Object {
 public:
  Object() = default;
  explicit Object(std::vector<Alphabet> factors) : factors_(std::move(factors)) { init(); }
  Object(std::initializer_list<Alphabet> factors) : factors_(factors) { init(); }

  static Object unit() { return Object(); }

  const std::vector<Alphabet>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  bool is_unit() const { return factors_.empty(); }
  std::size_t size() const { return size_; }

  std::vector<std::size_t> decode(std::size_t index) const {
    std::vector<std::size_t> digits(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
      digits[k] = index % factors_[k].size();
      index /= factors_[k].size();
    }
    return digits;
  }

  std::size_t encode(std::span<const std::size_t> digits) const {
    std::size_t index = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) index = index * factors_[k].size() + digits[k];
    return index;
  }

  /// Digit of factor k in the tuple with the given index.
  std::size_t digit(std::size_t index, std::size_t k) const {
    return (index / strides_[k]) % factors_[k].size();
  }

  std::string label(std::size_t index) const {
    if (factors_.size() == 1) return factors_[0].symbol(index);
    std::string out = "(";
    auto d = decode(index);
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (k) out += ",";
      out += factors_[k].symbol(d[k]);
    }
    return out + ")";
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back(label(i));
    return out;
  }

  std::vector<std::string> symbols_of(std::size_t index) const {
    std::vector<std::string> out;
    auto d = decode(index);
    for (std::size_t k = 0; k < d.size(); ++k) out.push_back(factors_[k].symbol(d[k]));
    return out;
  }

  /// Index of the tuple with the given symbols.
  std::size_t find(const std::vector<std::string>& symbols) const {
    if (symbols.size() != factors_.size())
      throw SymbolOutOfAlphabet("tuple has " + std::to_string(symbols.size()) + " entries, object has " +
                                std::to_string(factors_.size()) + " factors");
    std::vector<std::size_t> digits(symbols.size());
    for (std::size_t k = 0; k < symbols.size(); ++k) {
      auto i = factors_[k].index_of(symbols[k]);
      if (!i) throw SymbolOutOfAlphabet("symbol '" + symbols[k] + "' not in alphabet '" + factors_[k].name() + "'");
      digits[k] = *i;
    }
    return encode(digits);
  }

  /// Index of the element whose label is given.
  std::size_t find_label(std::string_view label) const {
    for (std::size_t i = 0; i < size_; ++i)
      if (this->label(i) == label) return i;
    throw SymbolOutOfAlphabet("no element labelled '" + std::string(label) + "'");
  }

  Object slice(std::size_t first, std::size_t count) const {
    return Object(std::vector<Alphabet>(factors_.begin() + static_cast<std::ptrdiff_t>(first),
                                        factors_.begin() + static_cast<std::ptrdiff_t>(first + count)));
  }

  std::string describe() const {
    if (factors_.empty()) return "I";
    std::string out;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      if (k) out += "@";
      out += factors_[k].name();
    }
    return out;
  }

  bool starts_with(const Object& prefix) const {
    if (prefix.factors_.size() > factors_.size()) return false;
    return std::equal(prefix.factors_.begin(), prefix.factors_.end(), factors_.begin());
  }

  friend bool operator==(const Object& a, const Object& b) { return a.factors_ == b.factors_; }

 private:
  void init() {
    strides_.assign(factors_.size(), 1);
    size_ = 1;
    for (std::size_t k = factors_.size(); k-- > 0;) {
      strides_[k] = size_;
      std::size_t n = factors_[k].size();
      if (n != 0 && size_ > std::numeric_limits<std::size_t>::max() / n)
        throw InvalidArgument("carrier too large");
      size_ *= n;
    }
  }

  std::vector<Alphabet> factors_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

inline Object tensor(const Object& a, const Object& b) {
  std::vector<Alphabet> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return Object(std::move(f));
}

/// Remainder of `whole` after removing `prefix`, if `whole` starts with it.
inline std::optional<Object> strip_prefix(const Object& whole, const Object& prefix) {
  if (!whole.starts_with(prefix)) return std::nullopt;
  return whole.slice(prefix.factor_count(), whole.factor_count() - prefix.factor_count());
}

/// One-factor object whose symbols are the given labels.
inline Object set_object(std::string name, std::vector<std::string> labels) {
  return Object{Alphabet(std::move(name), make_unique_labels(std::move(labels)))};
}

/// One-factor object with symbols "<prefix>0", "<prefix>1", ...
inline Object indexed_object(std::string name, std::size_t n, const std::string& prefix = "e") {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return Object{Alphabet(std::move(name), std::move(labels))};
}

/// The carrier of o as a one-factor object.
inline Object as_set(const Object& o) {
  if (o.factor_count() == 1) return o;
  return set_object(o.is_unit() ? std::string("I") : o.describe(), o.labels());
}

inline Object empty_object() { return Object{Alphabet("0", {})}; }

/// Disjoint union of the factors, flattened into one alphabet. A single factor
/// is returned unchanged and the unit becomes the empty set.
inline Object sum_object(const Object& o) {
  if (o.factor_count() == 1) return o;
  if (o.is_unit()) return empty_object();
  std::string name;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < o.factor_count(); ++k) {
    if (k) name += "+";
    name += o.factors()[k].name();
    const auto& s = o.factors()[k].symbols();
    labels.insert(labels.end(), s.begin(), s.end());
  }
  return set_object(std::move(name), std::move(labels));
}

/// Start offsets of each factor inside sum_object(o).
inline std::vector<std::size_t> sum_offsets(const Object& o) {
  std::vector<std::size_t> out;
  std::size_t at = 0;
  for (const auto& a : o.factors()) {
    out.push_back(at);
    at += a.size();
  }
  out.push_back(at);
  return out;
}

class FinFunction {
 public:
  FinFunction() = default;
  FinFunction(Object dom, Object cod, std::vector<std::size_t> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.size())
      throw InvalidArgument("table has " + std::to_string(table_.size()) + " entries for a domain of size " +
                            std::to_string(dom_.size()));
    for (auto v : table_)
      if (v >= cod_.size()) throw InvalidArgument("table entry " + std::to_string(v) + " outside codomain");
  }

  static FinFunction identity(const Object& o) {
    std::vector<std::size_t> t(o.size());
    std::iota(t.begin(), t.end(), std::size_t{0});
    return FinFunction(o, o, std::move(t));
  }

  const Object& dom() const { return dom_; }
  const Object& cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }

  friend bool operator==(const FinFunction& a, const FinFunction& b) {
    return a.table_ == b.table_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

 private:
  Object dom_;
  Object cod_;
  std::vector<std::size_t> table_;
};

/// Diagrammatic composition: first f, then g.
inline FinFunction compose(const FinFunction& f, const FinFunction& g) {
  if (!(f.cod() == g.dom()))
    throw BoundaryMismatch("cannot compose " + f.cod().describe() + " with " + g.dom().describe());
  std::vector<std::size_t> t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return FinFunction(f.dom(), g.cod(), std::move(t));
}

inline FinFunction tensor(const FinFunction& f, const FinFunction& g) {
  const std::size_t nd = g.dom().size(), nc = g.cod().size();
  std::vector<std::size_t> t(f.dom().size() * nd);
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    for (std::size_t j = 0; j < nd; ++j) t[i * nd + j] = f(i) * nc + g(j);
  return FinFunction(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()), std::move(t));
}

/// The map dom -> (factors picked from dom, in the given order). Picks may
/// repeat or omit factors, giving diagonals, projections and permutations.
inline FinFunction reindex(const Object& dom, const std::vector<std::size_t>& picks) {
  std::vector<Alphabet> f;
  for (auto p : picks) {
    if (p >= dom.factor_count()) throw InvalidArgument("factor pick out of range");
    f.push_back(dom.factors()[p]);
  }
  Object cod(std::move(f));
  std::vector<std::size_t> t(dom.size());
  std::vector<std::size_t> out(picks.size());
  for (std::size_t x = 0; x < dom.size(); ++x) {
    auto d = dom.decode(x);
    for (std::size_t k = 0; k < picks.size(); ++k) out[k] = d[picks[k]];
    t[x] = cod.encode(out);
  }
  return FinFunction(dom, std::move(cod), std::move(t));
}

inline std::vector<std::size_t> factor_range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> r(count);
  std::iota(r.begin(), r.end(), first);
  return r;
}

/// Projection onto factors [first, first + count).
inline FinFunction project(const Object& o, std::size_t first, std::size_t count) {
  return reindex(o, factor_range(first, count));
}

inline FinFunction terminal_map(const Object& o) { return reindex(o, {}); }

inline FinFunction diagonal(const Object& o) {
  auto r = factor_range(0, o.factor_count());
  auto picks = r;
  picks.insert(picks.end(), r.begin(), r.end());
  return reindex(o, picks);
}

/// Symmetry a ⊗ b -> b ⊗ a.
inline FinFunction swap_map(const Object& a, const Object& b) {
  auto picks = factor_range(a.factor_count(), b.factor_count());
  auto rest = factor_range(0, a.factor_count());
  picks.insert(picks.end(), rest.begin(), rest.end());
  return reindex(tensor(a, b), picks);
}

inline FinFunction initial_map(const Object& empty, const Object& cod) {
  if (empty.size() != 0) throw InvalidArgument("initial map needs an empty domain");
  return FinFunction(empty, cod, {});
}

/// Pairing <f, g> : X -> A ⊗ B.
inline FinFunction pair(const FinFunction& f, const FinFunction& g) {
  if (!(f.dom() == g.dom())) throw BoundaryMismatch("pair needs a common domain");
  const std::size_t nb = g.cod().size();
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = f(x) * nb + g(x);
  return FinFunction(f.dom(), tensor(f.cod(), g.cod()), std::move(t));
}

struct Coproduct {
  Object sum;
  FinFunction inl;
  FinFunction inr;
};

inline Coproduct coproduct(const Object& x, const Object& y) {
  std::string name = (x.is_unit() ? std::string("I") : x.describe()) + "+" + (y.is_unit() ? std::string("I") : y.describe());
  auto labels = x.labels();
  auto ly = y.labels();
  labels.insert(labels.end(), ly.begin(), ly.end());
  Object sum = set_object(std::move(name), std::move(labels));
  std::vector<std::size_t> l(x.size()), r(y.size());
  std::iota(l.begin(), l.end(), std::size_t{0});
  std::iota(r.begin(), r.end(), x.size());
  return {sum, FinFunction(x, sum, std::move(l)), FinFunction(y, sum, std::move(r))};
}

/// Copairing [f, g] : X + Y -> C.
inline FinFunction copair(const FinFunction& f, const FinFunction& g) {
  if (!(f.cod() == g.cod())) throw BoundaryMismatch("copair needs a common codomain");
  auto c = coproduct(f.dom(), g.dom());
  std::vector<std::size_t> t = f.table();
  t.insert(t.end(), g.table().begin(), g.table().end());
  return FinFunction(c.sum, f.cod(), std::move(t));
}

struct Pullback {
  Object head;
  FinFunction p1;
  FinFunction p2;
};

/// Pullback of f : X -> Z and g : Y -> Z. Pairs are listed lexicographically.
inline Pullback pullback(const FinFunction& f, const FinFunction& g) {
  if (!(f.cod() == g.cod()))
    throw BoundaryMismatch("pullback over different codomains " + f.cod().describe() + " and " +
                           g.cod().describe());
  std::vector<std::vector<std::size_t>> fibre(f.cod().size());
  for (std::size_t y = 0; y < g.dom().size(); ++y) fibre[g(y)].push_back(y);
  std::vector<std::size_t> a, b;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < f.dom().size(); ++x)
    for (auto y : fibre[f(x)]) {
      a.push_back(x);
      b.push_back(y);
      labels.push_back("<" + f.dom().label(x) + "," + g.dom().label(y) + ">");
    }
  Object head = set_object("P", std::move(labels));
  return {head, FinFunction(head, f.dom(), std::move(a)), FinFunction(head, g.dom(), std::move(b))};
}

/// Disjoint sets with path compression; the root of a class is its smallest member.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[b] = a;
    else
      parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Pushout {
  Object apex;
  FinFunction q1;
  FinFunction q2;
};

/// Pushout of f : Z -> X and g : Z -> Y. Classes of X + Y are numbered in
/// order of their smallest member.
inline Pushout pushout(const FinFunction& f, const FinFunction& g) {
  if (!(f.dom() == g.dom()))
    throw BoundaryMismatch("pushout over different domains " + f.dom().describe() + " and " + g.dom().describe());
  const std::size_t nx = f.cod().size(), ny = g.cod().size();
  UnionFind uf(nx + ny);
  for (std::size_t z = 0; z < f.dom().size(); ++z) uf.unite(f(z), nx + g(z));
  std::vector<std::size_t> cls(nx + ny);
  std::vector<std::size_t> dense(nx + ny, std::numeric_limits<std::size_t>::max());
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < nx + ny; ++i) {
    std::size_t r = uf.find(i);
    if (dense[r] == std::numeric_limits<std::size_t>::max()) {
      dense[r] = members.size();
      members.emplace_back();
    }
    cls[i] = dense[r];
    members[cls[i]].push_back(i);
  }
  auto lx = f.cod().labels();
  auto ly = g.cod().labels();
  std::vector<std::string> labels;
  for (const auto& m : members) {
    std::string s = "{";
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k) s += ",";
      s += m[k] < nx ? lx[m[k]] : ly[m[k] - nx];
    }
    labels.push_back(s + "}");
  }
  Object apex = set_object("Q", std::move(labels));
  std::vector<std::size_t> a(cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(nx));
  std::vector<std::size_t> b(cls.begin() + static_cast<std::ptrdiff_t>(nx), cls.end());
  return {apex, FinFunction(f.cod(), apex, std::move(a)), FinFunction(g.cod(), apex, std::move(b))};
}

inline bool is_bijection(const FinFunction& f) {
  if (f.dom().size() != f.cod().size()) return false;
  std::vector<bool> hit(f.cod().size(), false);
  for (auto v : f.table()) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

inline FinFunction inverse(const FinFunction& f) {
  if (!is_bijection(f)) throw InvalidArgument("inverse of a non-bijection");
  std::vector<std::size_t> t(f.cod().size());
  for (std::size_t x = 0; x < f.dom().size(); ++x) t[f(x)] = x;
  return FinFunction(f.cod(), f.dom(), std::move(t));
}

inline std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

inline Alphabet bool_alphabet() { return Alphabet("B", {"0", "1"}); }
inline Alphabet point_alphabet() { return Alphabet("1", {"*"}); }
inline Object two_object() { return Object{Alphabet("2", {"0", "1"})}; }

}  // namespace otsalg
