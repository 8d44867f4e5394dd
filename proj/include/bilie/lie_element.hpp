#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bilie/errors.hpp"
#include "bilie/lyndon.hpp"
#include "bilie/multidegree.hpp"
#include "bilie/numeric.hpp"

namespace bilie {

/// Sparse exact-rational combination of Lyndon basis words, optionally tagged
/// homogeneous of one bidegree. Zero coefficients are never stored.
class LieElement {
public:
  using TermMap = std::map<LyndonWord, Rat>;

  LieElement() = default;
  explicit LieElement(MultiDegree homogeneous_of) : degree_(homogeneous_of) {}

  static LieElement basis(const LyndonWord& w) {
    LieElement e(w.bidegree());
    e.terms_.emplace(w, Rat(1));
    return e;
  }
  static LieElement basis(const std::string& letters) {
    return basis(LyndonWord(letters));
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  const std::optional<MultiDegree>& degree() const { return degree_; }

  Rat coefficient(const LyndonWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const LyndonWord& w, const Rat& c) {
    if (c == 0) return;
    if (degree_ && w.bidegree() != *degree_)
      throw DomainError("LieElement: term " + w.letters() + " violates homogeneity tag " +
                        degree_->str());
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Largest total degree among stored terms; nullopt for zero.
  std::optional<int> max_total_degree() const {
    if (degree_) return degree_->total();
    std::optional<int> d;
    for (const auto& [w, c] : terms_) d = std::max(d.value_or(0), w.total_degree());
    return d;
  }

  LieElement& operator+=(const LieElement& o) {
    merge_tags(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  LieElement& operator-=(const LieElement& o) {
    merge_tags(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  LieElement& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rat& s, LieElement a) { return a *= s; }
  friend LieElement operator-(LieElement a) { return a *= Rat(-1); }

  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Stable text encoding: terms in lexicographic word order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) os << " + ";
      os << c << "*" << w.letters();
      first = false;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const LieElement& e) {
    return os << e.str();
  }

private:
  void merge_tags(const LieElement& o) {
    // Zero is homogeneous of every bidegree, so it never constrains the
    // other side; otherwise keep a tag only when both sides agree.
    if (o.terms_.empty()) return;
    if (terms_.empty()) {
      degree_ = o.degree_;
      return;
    }
    if (degree_ != o.degree_) degree_.reset();
  }

  TermMap terms_;
  std::optional<MultiDegree> degree_;
};

/// Memoized normalization of brackets of basis words.
///
/// For Lyndon words u < v the concatenation uv is Lyndon, and
/// [b(u), b(v)] = b(uv) exactly when (u, v) is the standard factorization of
/// uv, i.e. when u is a letter or the right factor of u's standard
/// factorization is >= v. Otherwise write u = u1 u2 and apply Jacobi:
///   [b(u), b(v)] = [b(u1), [b(u2), b(v)]] - [b(u2), [b(u1), b(v)]].
/// The recursion terminates because every Lyndon word in the expansion of
/// [b(p), b(q)] is >= pq, so nested pairs keep moving up in the order.
///
/// Instances are safe for concurrent use: fills are idempotent and guarded.
class BracketTable {
public:
  /// Integer coordinates of [b(u), b(v)] in the Lyndon basis of the summed
  /// bidegree, as a sorted sparse vector.
  using Expansion = std::vector<std::pair<LyndonWord, Int>>;

  /// [b(u), b(v)] for arbitrary basis words (handles order and coincidence).
  Expansion pair_bracket(const LyndonWord& u, const LyndonWord& v) {
    if (u == v) return {};
    if (v < u) return negated(ordered_bracket(v, u));
    return ordered_bracket(u, v);
  }

private:
  static Expansion negated(Expansion e) {
    for (auto& [w, c] : e) c = -c;
    return e;
  }

  Expansion ordered_bracket(const LyndonWord& u, const LyndonWord& v) {
    const auto key = std::make_pair(u.letters(), v.letters());
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }

    Expansion result;
    const LyndonWord uv(u.letters() + v.letters());
    if (u.length() == 1 || u.standard_factorization().second >= v) {
      result.emplace_back(uv, Int(1));
    } else {
      auto [u1, u2] = u.standard_factorization();
      std::map<LyndonWord, Int> acc;
      accumulate_nested(u1, pair_bracket(u2, v), Int(1), acc);
      accumulate_nested(u2, pair_bracket(u1, v), Int(-1), acc);
      result.reserve(acc.size());
      for (auto& [w, c] : acc)
        if (c != 0) result.emplace_back(w, std::move(c));
    }

    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.emplace(key, std::move(result)).first->second;
  }

  void accumulate_nested(const LyndonWord& left, const Expansion& inner, const Int& sign,
                         std::map<LyndonWord, Int>& acc) {
    for (const auto& [w, c] : inner)
      for (const auto& [w2, c2] : pair_bracket(left, w)) acc[w2] += sign * c * c2;
  }

  std::mutex mutex_;
  std::map<std::pair<std::string, std::string>, Expansion> memo_;
};

/// Lie bracket, bilinear over the basis-pair table. Homogeneity tags add.
inline LieElement bracket(const LieElement& a, const LieElement& b, BracketTable& table) {
  LieElement out;
  if (a.degree() && b.degree()) out = LieElement(*a.degree() + *b.degree());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      const Rat cuv = cu * cv;
      for (const auto& [w, c] : table.pair_bracket(u, v)) out.add_term(w, cuv * Rat(c));
    }
  return out;
}

}  // namespace bilie
