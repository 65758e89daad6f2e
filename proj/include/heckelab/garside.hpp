#pragma once

#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "heckelab/coxeter.hpp"

namespace heckelab {

/// One braid-word letter: a generator index and a sign.
struct BraidLetter {
  int gen = 0;
  int sign = +1;
  bool operator==(const BraidLetter&) const = default;
};

using BraidWord = std::vector<BraidLetter>;

/// Whitespace-separated signed 1-based integers, e.g. "1 2 -1".
inline BraidWord parse_braid_word(std::string_view text) {
  BraidWord out;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long val = 0;
    try {
      val = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad braid letter '" + tok + "'");
    }
    if (used != tok.size() || val == 0)
      throw ParseError("bad braid letter '" + tok + "'");
    out.push_back({static_cast<int>(std::labs(val)) - 1, val > 0 ? +1 : -1});
  }
  return out;
}

inline std::string braid_word_str(const BraidWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i].sign * (w[i].gen + 1);
  }
  return os.str();
}

/// Garside normal form of an element of the spherical Artin-Tits group:
/// Delta^k x_1 ... x_m with simple factors x_i (Weyl elements, never e or
/// w0) and the sequence left-weighted. Two braids are equal iff their
/// normal forms agree componentwise.
class GarsideNF {
public:
  static GarsideNF identity(SystemPtr sys) { return GarsideNF(std::move(sys), 0, {}); }

  GarsideNF(SystemPtr sys, long long delta, std::vector<std::uint32_t> factors)
      : sys_(std::move(sys)), delta_(delta), factors_(std::move(factors)) {
    normalize();
  }

  const SystemPtr& system() const { return sys_; }
  long long delta_power() const { return delta_; }
  const std::vector<std::uint32_t>& factor_ids() const { return factors_; }
  std::vector<WeylElement> factors() const {
    std::vector<WeylElement> out;
    for (std::uint32_t f : factors_) out.emplace_back(sys_, f);
    return out;
  }
  bool is_identity() const { return delta_ == 0 && factors_.empty(); }

  /// Writhe-style letter count: delta contributes l(w0) per power.
  long long letter_length() const {
    long long n = delta_ * sys_->id_length(sys_->id_w0());
    for (std::uint32_t f : factors_) n += sys_->id_length(f);
    return n;
  }

  bool operator==(const GarsideNF& o) const {
    if (sys_.get() != o.sys_.get())
      throw MixedSystems("comparison of braids over different systems");
    return delta_ == o.delta_ && factors_ == o.factors_;
  }
  bool operator!=(const GarsideNF& o) const { return !(*this == o); }

private:
  friend GarsideNF nf_multiply(const GarsideNF&, const GarsideNF&);

  // conjugation by Delta; an involution on simple elements
  std::uint32_t tau(std::uint32_t x) const {
    std::uint32_t w0 = sys_->id_w0();
    return sys_->id_product(sys_->id_product(w0, x), w0);
  }

  void normalize() {
    const CoxeterSystem& S = *sys_;
    const std::uint32_t w0 = S.id_w0();
    // local sliding until every adjacent pair is left-weighted
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < factors_.size(); ++i) {
        std::uint32_t& a = factors_[i];
        std::uint32_t& b = factors_[i + 1];
        while (true) {
          GenMask movable = S.id_left_descents(b) & ~S.id_right_descents(a);
          if (!movable) break;
          int s = std::countr_zero(movable);
          a = S.id_mul_gen_right(a, s);
          b = S.id_mul_gen_left(b, s);
          changed = true;
        }
      }
    }
    // in a left-weighted sequence, w0 factors sit at the front and trivial
    // factors at the back; fold them into the delta power
    std::size_t lead = 0;
    while (lead < factors_.size() && factors_[lead] == w0 && w0 != 0) ++lead;
    delta_ += static_cast<long long>(lead);
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<long>(lead));
    while (!factors_.empty() && factors_.back() == 0) factors_.pop_back();
    for (std::uint32_t f : factors_)
      if (f == 0 || f == w0) throw Error("internal: normal form not left-weighted");
  }

  SystemPtr sys_;
  long long delta_ = 0;
  std::vector<std::uint32_t> factors_;
};

inline bool nf_equal(const GarsideNF& a, const GarsideNF& b) { return a == b; }

inline GarsideNF nf_multiply(const GarsideNF& a, const GarsideNF& b) {
  if (a.system().get() != b.system().get())
    throw MixedSystems("product of braids over different systems");
  // (Delta^k A)(Delta^l B) = Delta^{k+l} tau^l(A) B
  std::vector<std::uint32_t> factors;
  factors.reserve(a.factor_ids().size() + b.factor_ids().size());
  const bool twist = (b.delta_power() % 2) != 0;
  for (std::uint32_t f : a.factor_ids()) factors.push_back(twist ? a.tau(f) : f);
  for (std::uint32_t f : b.factor_ids()) factors.push_back(f);
  return GarsideNF(a.system(), a.delta_power() + b.delta_power(), std::move(factors));
}

/// Delta_w, the positive simple braid lifting w.
inline GarsideNF positive_lift(const WeylElement& w) {
  const auto& sys = w.system();
  if (w.id() == sys->id_w0() && w.id() != 0) return GarsideNF(sys, 1, {});
  if (w.is_identity()) return GarsideNF::identity(sys);
  return GarsideNF(sys, 0, {w.id()});
}

inline GarsideNF nf_inverse(const GarsideNF& a) {
  const auto& sys = a.system();
  const std::uint32_t w0 = sys->id_w0();
  // (Delta^k x_1..x_m)^-1 = x_m^-1 ... x_1^-1 Delta^-k, with
  // Delta_x^-1 = Delta^-1 * Delta_{w0 x^-1}
  GarsideNF acc = GarsideNF::identity(sys);
  const auto& fs = a.factor_ids();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    std::uint32_t piece = sys->id_product(w0, sys->id_inverse(*it));
    acc = nf_multiply(acc, GarsideNF(sys, -1, {piece}));
  }
  return nf_multiply(acc, GarsideNF(sys, -a.delta_power(), {}));
}

/// nabla_w = (Delta_{w^-1})^-1, the negative lift of w.
inline GarsideNF negative_lift(const WeylElement& w) {
  return nf_inverse(positive_lift(w.inverse()));
}

inline GarsideNF nf_from_word(const SystemPtr& sys, const BraidWord& word) {
  const std::uint32_t w0 = sys->id_w0();
  long long delta = 0;
  std::vector<std::uint32_t> factors;
  auto renorm = [&]() {
    GarsideNF nf(sys, delta, std::move(factors));
    delta = nf.delta_power();
    factors = nf.factor_ids();
  };
  for (const auto& letter : word) {
    if (letter.gen < 0 || letter.gen >= sys->rank())
      throw InvalidGenerator("braid letter " + std::to_string(letter.gen + 1) +
                             " out of range for rank " + std::to_string(sys->rank()));
    std::uint32_t s = sys->simple(letter.gen).id();
    if (letter.sign > 0) {
      factors.push_back(s);
    } else {
      // sigma_s^-1 = Delta^-1 Delta_{w0 s}; pushing Delta^-1 left applies tau
      GarsideNF cur(sys, delta, std::move(factors));
      std::uint32_t piece = sys->id_mul_gen_right(w0, letter.gen);
      GarsideNF next = nf_multiply(cur, GarsideNF(sys, -1, piece == 0
                                                               ? std::vector<std::uint32_t>{}
                                                               : std::vector<std::uint32_t>{piece}));
      delta = next.delta_power();
      factors = next.factor_ids();
      continue;
    }
    renorm();
  }
  return GarsideNF(sys, delta, std::move(factors));
}

/// A braid word spelling the normal form (delta as lifts of w0).
inline BraidWord word_of(const GarsideNF& nf) {
  const auto& sys = nf.system();
  BraidWord out;
  const auto& w0_word = sys->id_word(sys->id_w0());
  long long k = nf.delta_power();
  if (k > 0) {
    for (long long i = 0; i < k; ++i)
      for (std::uint8_t s : w0_word) out.push_back({int(s), +1});
  } else if (k < 0) {
    for (long long i = 0; i < -k; ++i)
      for (auto it = w0_word.rbegin(); it != w0_word.rend(); ++it)
        out.push_back({int(*it), -1});
  }
  for (std::uint32_t f : nf.factor_ids())
    for (std::uint8_t s : sys->id_word(f)) out.push_back({int(s), +1});
  return out;
}

/// FT_I: square of the positive lift of the longest element of W_I.
inline GarsideNF full_twist(const SystemPtr& sys, GenMask I) {
  GarsideNF d = positive_lift(longest_element(sys, I));
  return nf_multiply(d, d);
}

/// "Δ^k · [1 2, 1]" (factors as 1-based words, comma separated).
inline std::string nf_str(const GarsideNF& nf) {
  std::ostringstream os;
  os << "Δ^" << nf.delta_power() << " · [";
  const auto& fs = nf.factor_ids();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) os << ", ";
    os << WeylElement(nf.system(), fs[i]).word_str();
  }
  os << "]";
  return os.str();
}

/// The full twist commutes with every generator (hence with everything).
inline bool check_ft_central(const SystemPtr& sys) {
  GarsideNF ft = full_twist(sys, sys->full_mask());
  for (int s = 0; s < sys->rank(); ++s) {
    GarsideNF g = positive_lift(sys->simple(s));
    if (nf_multiply(ft, g) != nf_multiply(g, ft)) return false;
  }
  return true;
}

struct ConjugationCheck {
  bool conjugation_ok = false;  // FT_G = Delta_u FT_L Delta_{u^-1}
  bool nabla_ok = false;        // FT_L = FT_G nabla_{u^-1} nabla_u
  bool ok() const { return conjugation_ok && nabla_ok; }
};

/// Checks the two braid-group identities relating FT_G, FT_L and the coset
/// representative u = w0 * w0L^{-1}.
inline ConjugationCheck check_conjugation_identity(const SystemPtr& sys, GenMask I) {
  ParabolicSubset P(sys, I);
  WeylElement u = P.u();
  GarsideNF ft_g = full_twist(sys, sys->full_mask());
  GarsideNF ft_l = full_twist(sys, I);
  ConjugationCheck out;
  GarsideNF lhs = nf_multiply(nf_multiply(positive_lift(u), ft_l), positive_lift(u.inverse()));
  out.conjugation_ok = (lhs == ft_g);
  GarsideNF rhs = nf_multiply(nf_multiply(ft_g, negative_lift(u.inverse())), negative_lift(u));
  out.nabla_ok = (rhs == ft_l);
  return out;
}

}  // namespace heckelab
