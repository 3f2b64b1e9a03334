#include "csf/transitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace csf {

namespace {

class PolyCache {
public:
  std::optional<SymPoly> get(const Partition& key) {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void put(const Partition& key, const SymPoly& value) {
    std::unique_lock lock(mu_);
    map_.try_emplace(key, value);
  }
  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

private:
  std::shared_mutex mu_;
  std::map<Partition, SymPoly> map_;
};

PolyCache& e_cache() {
  static PolyCache c;
  return c;
}
PolyCache& p_cache() {
  static PolyCache c;
  return c;
}
PolyCache& kostka_cache() {
  static PolyCache c;
  return c;
}

Partition drop_last_part(const Partition& p) {
  std::vector<int> parts = p.parts();
  parts.pop_back();
  return Partition(std::move(parts));
}

Partition ones(int k) {
  return Partition(std::vector<int>(static_cast<size_t>(k), 1));
}

}  // namespace

SymPoly e_to_m(const Partition& lambda) {
  if (lambda.empty()) return SymPoly::term(Basis::monomial, Partition{});
  if (auto hit = e_cache().get(lambda)) return *hit;
  int last = lambda.parts().back();
  SymPoly result = multiply(e_to_m(drop_last_part(lambda)),
                            SymPoly::term(Basis::monomial, ones(last)));
  e_cache().put(lambda, result);
  return result;
}

SymPoly p_to_m(const Partition& lambda) {
  if (lambda.empty()) return SymPoly::term(Basis::monomial, Partition{});
  if (auto hit = p_cache().get(lambda)) return *hit;
  int last = lambda.parts().back();
  SymPoly result = multiply(p_to_m(drop_last_part(lambda)),
                            SymPoly::term(Basis::monomial, Partition({last})));
  p_cache().put(lambda, result);
  return result;
}


namespace {

// Semistandard tableau counting.  Entries t, t-1, ..., 1 are placed as
// horizontal strips from the outside in; the recursion counts the ways.
Coeff ssyt_count(const std::vector<int>& shape, int t, const std::vector<int>& content,
                 std::map<std::pair<std::vector<int>, int>, Coeff>& memo) {
  if (t == 0) return shape.empty() ? Coeff(1) : Coeff(0);
  auto key = std::make_pair(shape, t);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int strip = content[static_cast<size_t>(t) - 1];
  Coeff total(0);
  // Enumerate inner shapes nu with nu_i in [shape_{i+1}, shape_i] and
  // |shape| - |nu| == strip (horizontal strip condition).
  std::vector<int> nu(shape.size());
  auto rec = [&](auto&& self, size_t row, int removed) -> void {
    if (row == shape.size()) {
      if (removed != strip) return;
      std::vector<int> inner;
      for (int v : nu) {
        if (v > 0) inner.push_back(v);
      }
      total += ssyt_count(inner, t - 1, content, memo);
      return;
    }
    int lo = row + 1 < shape.size() ? shape[row + 1] : 0;
    int hi = shape[row];
    for (int v = lo; v <= hi; ++v) {
      int drop = hi - v;
      if (removed + drop > strip) continue;
      nu[row] = v;
      self(self, row + 1, removed + drop);
    }
  };
  rec(rec, 0, 0);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Coeff kostka_number(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return Coeff(0);
  std::map<std::pair<std::vector<int>, int>, Coeff> memo;
  return ssyt_count(lambda.parts(), mu.length(), mu.parts(), memo);
}

namespace {

// Memo for the chain DP below, keyed by (shape, minimum strip size).  Shapes
// recur across different Kostka rows, so the cache is shared and long-lived.
class ChainCache {
public:
  std::optional<SymPoly> get(const std::pair<std::vector<int>, int>& key) {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void put(std::pair<std::vector<int>, int> key, const SymPoly& value) {
    std::unique_lock lock(mu_);
    map_.try_emplace(std::move(key), value);
  }
  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

private:
  std::shared_mutex mu_;
  std::map<std::pair<std::vector<int>, int>, SymPoly> map_;
};

ChainCache& chain_cache() {
  static ChainCache c;
  return c;
}

// Sum over all ways to peel `shape` down to nothing by horizontal strips of
// weakly increasing sizes, starting at min_strip: each peel order corresponds
// to exactly one semistandard tableau read from the largest entry inward, so
// the coefficient of m_nu in the result is the Kostka number K_{shape,nu}.
SymPoly kostka_chain(const std::vector<int>& shape, int min_strip) {
  if (shape.empty()) return SymPoly::term(Basis::monomial, Partition{});
  auto key = std::make_pair(shape, min_strip);
  if (auto hit = chain_cache().get(key)) return *hit;

  SymPoly out(Basis::monomial);
  // Enumerate inner shapes nu with nu_i in [shape_{i+1}, shape_i]; the strip
  // size is |shape| - |nu|, at most one cell per column.  A zero strip is
  // rejected by the min_strip >= 1 floor.
  std::vector<int> nu(shape.size());
  auto rec = [&](auto&& self, size_t row, int removed) -> void {
    if (row == shape.size()) {
      int strip = removed;
      if (strip < min_strip) return;
      std::vector<int> inner;
      for (int v : nu) {
        if (v > 0) inner.push_back(v);
      }
      SymPoly sub = kostka_chain(inner, strip);
      for (const auto& [tail, c] : sub.terms()) {
        std::vector<int> parts = tail.parts();
        parts.push_back(strip);
        out.add_term(Partition(std::move(parts)), c);
      }
      return;
    }
    int lo = row + 1 < shape.size() ? shape[row + 1] : 0;
    int hi = shape[row];
    for (int v = lo; v <= hi; ++v) {
      nu[row] = v;
      self(self, row + 1, removed + hi - v);
    }
  };
  rec(rec, 0, 0);

  chain_cache().put(std::move(key), out);
  return out;
}

}  // namespace

SymPoly kostka_row(const Partition& lambda) {
  if (auto hit = kostka_cache().get(lambda)) return *hit;
  SymPoly row(Basis::monomial);
  if (lambda.empty()) {
    row.add_term(Partition{}, Coeff(1));
  } else {
    row = kostka_chain(lambda.parts(), 1);
  }
  kostka_cache().put(lambda, row);
  return row;
}

namespace {

// Shared peeling loop: `row_of(lambda)` must return an M-basis polynomial of
// the form m_lambda + (terms strictly below lambda in dominance order).
SymPoly peel(const SymPoly& m_poly, Basis target,
             const std::function<SymPoly(const Partition&)>& row_of,
             const std::function<Partition(const Partition&)>& index_of) {
  if (m_poly.basis() != Basis::monomial) {
    throw std::invalid_argument("expand: input must be in the monomial basis");
  }
  SymPoly out(target);
  SymPoly rem = m_poly;
  while (!rem.is_zero()) {
    const auto& [lambda, c] = *rem.terms().rbegin();
    Partition pinned = lambda;
    out.add_term(index_of(pinned), c);
    rem -= row_of(pinned) * c;
    if (!rem.is_zero() && !(rem.terms().rbegin()->first < pinned)) {
      throw std::logic_error("expand: peeling failed to make progress (input not symmetric?)");
    }
  }
  return out;
}

}  // namespace

SymPoly expand_in_e(const SymPoly& m_poly) {
  return peel(
      m_poly, Basis::elementary,
      [](const Partition& lambda) { return e_to_m(lambda.conjugate()); },
      [](const Partition& lambda) { return lambda.conjugate(); });
}

SymPoly expand_in_s(const SymPoly& m_poly) {
  return peel(
      m_poly, Basis::schur, [](const Partition& lambda) { return kostka_row(lambda); },
      [](const Partition& lambda) { return lambda; });
}

SymPoly jacobi_trudi_schur(const Partition& lambda) {
  SymPoly out(Basis::elementary);
  if (lambda.empty()) {
    out.add_term(Partition{}, Coeff(1));
    return out;
  }
  int d = lambda.part(0);
  std::vector<int> conj = lambda.conjugate().parts();
  auto conj_at = [&](int i) { return i < static_cast<int>(conj.size()) ? conj[static_cast<size_t>(i)] : 0; };

  std::vector<int> perm(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) perm[static_cast<size_t>(i)] = i;
  do {
    int inversions = 0;
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
      }
    }
    std::vector<int> parts;
    bool zero = false;
    for (int i = 0; i < d; ++i) {
      int k = conj_at(i) - i + perm[static_cast<size_t>(i)];
      if (k < 0) {
        zero = true;
        break;
      }
      if (k > 0) parts.push_back(k);
    }
    if (!zero) {
      Coeff sign = (inversions % 2 == 0) ? Coeff(1) : Coeff(-1);
      out.add_term(Partition(std::move(parts)), sign);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SymPoly to_monomial_basis(const SymPoly& f) {
  if (f.basis() == Basis::monomial) return f;
  const auto row_of = [&](const Partition& lambda) -> SymPoly {
    switch (f.basis()) {
      case Basis::elementary: return e_to_m(lambda);
      case Basis::power: return p_to_m(lambda);
      case Basis::schur: return kostka_row(lambda);
      default: throw std::invalid_argument("to_monomial_basis: unsupported basis");
    }
  };
  SymPoly out(Basis::monomial);
  for (const auto& [lambda, c] : f.terms()) {
    out += row_of(lambda) * c;
  }
  return out;
}

void clear_transition_caches() {
  e_cache().clear();
  p_cache().clear();
  chain_cache().clear();
  kostka_cache().clear();
}

}  // namespace csf
