#include "csf/sympoly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace csf {

char basis_letter(Basis b) { return static_cast<char>(b); }

Basis basis_from_letter(char c) {
  switch (c) {
    case 'm': return Basis::monomial;
    case 'p': return Basis::power;
    case 'e': return Basis::elementary;
    case 's': return Basis::schur;
    default: throw ParseError(std::string("unknown basis letter '") + c + "'");
  }
}

SymPoly SymPoly::term(Basis b, Partition p, Coeff c) {
  SymPoly f(b);
  f.add_term(p, c);
  return f;
}

Coeff SymPoly::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void SymPoly::add_term(const Partition& p, Coeff c) {
  if (c.is_zero()) {
    return;
  }
  if (!terms_.empty() && p.weight() != degree()) {
    throw std::logic_error("SymPoly: mixed term weights");
  }
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (basis_ != o.basis_) throw std::invalid_argument("SymPoly: basis mismatch in addition");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (basis_ != o.basis_) throw std::invalid_argument("SymPoly: basis mismatch in subtraction");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(Coeff c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

std::string SymPoly::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    bool neg = c.is_negative();
    Coeff mag = neg ? -c : c;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (!(mag == Coeff(1))) out += mag.str();
    out += basis_letter(basis_);
    out += '[';
    out += p.str();
    out += ']';
  }
  return out;
}

namespace {

struct Scanner {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return text[pos]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("SymPoly parse error at offset " + std::to_string(pos) + ": " + what);
  }
  Coeff number() {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected digit");
    Coeff v(0);
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * Coeff(10) + Coeff(text[pos] - '0');
      ++pos;
    }
    return v;
  }
  int small_int() {
    Coeff v = number();
    if (v.is_zero()) fail("partition parts must be positive");
    if (v > Coeff(1'000'000)) fail("partition part out of range");
    return static_cast<int>(v.to_int64());
  }
};

}  // namespace

SymPoly SymPoly::parse(std::string_view text) {
  Scanner sc{text};
  sc.skip_ws();
  // Bare "0" denotes the zero polynomial (reported in the monomial basis).
  if (!sc.done() && sc.peek() == '0') {
    size_t save = sc.pos;
    ++sc.pos;
    if (sc.done()) return SymPoly(Basis::monomial);
    sc.pos = save;
  }

  std::optional<Basis> basis;
  std::vector<std::pair<Partition, Coeff>> parsed;
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (first) {
      if (sc.peek() == '-' || sc.peek() == '+') {
        sign = sc.peek() == '-' ? -1 : 1;
        ++sc.pos;
        sc.skip_ws();
      }
    } else {
      if (sc.peek() != '+' && sc.peek() != '-') sc.fail("expected '+' or '-'");
      sign = sc.peek() == '-' ? -1 : 1;
      ++sc.pos;
      sc.skip_ws();
    }
    first = false;

    Coeff mag(1);
    if (sc.pos < sc.text.size() && std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      mag = sc.number();
    }
    if (sc.pos >= sc.text.size()) sc.fail("expected basis letter");
    Basis b = basis_from_letter(sc.peek());
    if (basis && *basis != b) sc.fail("mixed basis letters");
    basis = b;
    ++sc.pos;
    if (sc.pos >= sc.text.size() || sc.peek() != '[') sc.fail("expected '['");
    ++sc.pos;
    std::vector<int> parts;
    sc.skip_ws();
    if (sc.pos < sc.text.size() && sc.peek() != ']') {
      parts.push_back(sc.small_int());
      sc.skip_ws();
      while (sc.pos < sc.text.size() && sc.peek() == ',') {
        ++sc.pos;
        sc.skip_ws();
        parts.push_back(sc.small_int());
        sc.skip_ws();
      }
    }
    if (sc.pos >= sc.text.size() || sc.peek() != ']') sc.fail("expected ']'");
    ++sc.pos;
    Coeff c = sign < 0 ? -mag : mag;
    parsed.emplace_back(Partition(std::move(parts)), c);
  }
  if (!basis) throw ParseError("SymPoly parse error: empty input");
  SymPoly out(*basis);
  for (auto& [p, c] : parsed) out.add_term(p, c);
  return out;
}

namespace {

Coeff binomial(int n, int k) {
  if (k < 0 || k > n) return Coeff(0);
  Coeff num(1);
  for (int i = 0; i < k; ++i) num *= Coeff(n - i);
  return num.exact_div(Coeff::factorial(k));
}

Coeff int_pow(int base, int exp) {
  Coeff r(1);
  for (int i = 0; i < exp; ++i) r *= Coeff(base);
  return r;
}

}  // namespace

Coeff SymPoly::evaluate_at_ones(int k) const {
  if (k < 0) throw std::invalid_argument("evaluate_at_ones: negative variable count");
  Coeff total(0);
  switch (basis_) {
    case Basis::monomial:
      for (const auto& [p, c] : terms_) {
        int l = p.length();
        if (l > k) continue;
        // Number of distinct monomials of this exponent type in k variables.
        Coeff count = binomial(k, l) * Coeff::factorial(l).exact_div(p.multiplicity_factorial());
        total += c * count;
      }
      return total;
    case Basis::power:
      for (const auto& [p, c] : terms_) total += c * int_pow(k, p.length());
      return total;
    case Basis::elementary:
      for (const auto& [p, c] : terms_) {
        Coeff v(1);
        for (int part : p.parts()) v *= binomial(k, part);
        total += c * v;
      }
      return total;
    case Basis::schur:
      throw std::invalid_argument("evaluate_at_ones: unsupported for the Schur basis");
  }
  throw std::logic_error("evaluate_at_ones: bad basis tag");
}

namespace {

// One run of equal parts in mu: `count` copies of `value`.
struct PartGroup {
  int value = 0;
  int count = 0;
};

// Enumerates partial injections of mu's parts into lambda's part positions,
// counting all injections that agree up to permuting equal mu parts as one
// leaf with weight count!/free! (choose the free copies, then order the
// attached ones over their chosen slots).  Equal mu parts are by far the
// hottest case -- multiplying by m[1^k] -- so collapsing them turns a k!
// enumeration into a combination scan.
void merge_patterns(std::vector<int>& slots, std::span<const PartGroup> groups,
                    uint64_t used, std::vector<int>& free_parts, Coeff weight,
                    const std::function<void(const std::vector<int>&, const std::vector<int>&,
                                             const Coeff&)>& emit) {
  if (groups.empty()) {
    emit(slots, free_parts, weight);
    return;
  }
  const auto [value, count] = groups.front();
  auto rest = groups.subspan(1);
  // Distribute this group's copies: pick how many stay free, then a strictly
  // increasing sequence of slots for the attached ones.
  auto place = [&](auto&& self, int copies_left, size_t min_slot, uint64_t used_now,
                   Coeff w) -> void {
    if (copies_left == 0) {
      merge_patterns(slots, rest, used_now, free_parts, w, emit);
      return;
    }
    // All remaining copies stay free.  Attaching the next copy below
    // multiplies the weight by copies_left, so a leaf with f free copies
    // accumulates count * (count-1) * ... * (f+1) = count!/f!.
    for (int i = 0; i < copies_left; ++i) free_parts.push_back(value);
    merge_patterns(slots, rest, used_now, free_parts, w, emit);
    for (int i = 0; i < copies_left; ++i) free_parts.pop_back();
    // Or attach the next copy to one unused slot at or after min_slot.
    for (size_t s = min_slot; s < slots.size(); ++s) {
      uint64_t bit = uint64_t{1} << s;
      if (used_now & bit) continue;
      slots[s] += value;
      self(self, copies_left - 1, s + 1, used_now | bit, w * Coeff(copies_left));
      slots[s] -= value;
    }
  };
  place(place, count, 0, used, weight);
}

std::vector<PartGroup> group_parts(const std::vector<int>& parts) {
  std::vector<PartGroup> groups;
  for (int p : parts) {
    if (!groups.empty() && groups.back().value == p) {
      ++groups.back().count;
    } else {
      groups.push_back({p, 1});
    }
  }
  return groups;
}

}  // namespace

SymPoly multiply(const SymPoly& a, const SymPoly& b) {
  if (a.basis() != Basis::monomial || b.basis() != Basis::monomial) {
    throw std::invalid_argument("multiply: both factors must be in the monomial basis");
  }
  SymPoly out(Basis::monomial);
  if (a.is_zero() || b.is_zero()) return out;

  // In augmented-monomial coordinates (m_lambda scaled by the multiplicity
  // factorial r_lambda!) the product is a plain sum over merge patterns, so
  // the m-coefficient of nu in m_lambda * m_mu is
  // (#patterns yielding nu) * r_nu! / (r_lambda! * r_mu!), always an integer.
  for (const auto& [la, ca] : a.terms()) {
    if (la.length() > 63) throw std::invalid_argument("multiply: partition too long");
    for (const auto& [mu, cb] : b.terms()) {
      std::map<Partition, Coeff> pattern_counts;
      std::vector<int> slots = la.parts();
      std::vector<int> free_parts;
      std::vector<PartGroup> groups = group_parts(mu.parts());
      merge_patterns(slots, groups, 0, free_parts, Coeff(1),
                     [&](const std::vector<int>& s, const std::vector<int>& f, const Coeff& w) {
                       std::vector<int> merged;
                       merged.reserve(s.size() + f.size());
                       merged.insert(merged.end(), s.begin(), s.end());
                       merged.insert(merged.end(), f.begin(), f.end());
                       Partition nu(std::move(merged));
                       auto [it, fresh] = pattern_counts.try_emplace(nu, w);
                       if (!fresh) it->second += w;
                     });
      Coeff divisor = la.multiplicity_factorial() * mu.multiplicity_factorial();
      for (const auto& [nu, count] : pattern_counts) {
        Coeff c = (count * nu.multiplicity_factorial()).exact_div(divisor);
        out.add_term(nu, ca * cb * c);
      }
    }
  }
  return out;
}

SymPoly multiply_power(const SymPoly& a, const SymPoly& b) {
  if (a.basis() != Basis::power || b.basis() != Basis::power) {
    throw std::invalid_argument("multiply_power: both factors must be in the power basis");
  }
  SymPoly out(Basis::power);
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [mu, cb] : b.terms()) {
      std::vector<int> merged = la.parts();
      merged.insert(merged.end(), mu.parts().begin(), mu.parts().end());
      out.add_term(Partition(std::move(merged)), ca * cb);
    }
  }
  return out;
}

std::optional<NegativeTerm> negative_witness(const SymPoly& f) {
  std::optional<NegativeTerm> worst;
  for (const auto& [p, c] : f.terms()) {
    if (!c.is_negative()) continue;
    if (!worst || c < worst->coeff) worst = NegativeTerm{p, c};
  }
  return worst;
}

bool is_positive(const SymPoly& f) {
  if (f.basis() != Basis::elementary && f.basis() != Basis::schur) {
    throw std::invalid_argument("is_positive: expected an E- or S-basis expansion");
  }
  return !negative_witness(f).has_value();
}

}  // namespace csf
