#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "heckelab/coxeter.hpp"
#include "heckelab/garside.hpp"
#include "heckelab/laurent.hpp"

namespace heckelab {

/// Element of the Iwahori-Hecke algebra of a system, written in the standard
/// basis {H_w}. Normalization: H_s^2 = 1 + (v^-1 - v) H_s, so that
/// H_s^-1 = H_s + (v - v^-1).
class HeckeElt {
public:
  HeckeElt() = default;
  explicit HeckeElt(SystemPtr sys) : sys_(std::move(sys)) {}

  static HeckeElt zero(SystemPtr sys) { return HeckeElt(std::move(sys)); }
  static HeckeElt unit(SystemPtr sys) {
    HeckeElt h(std::move(sys));
    h.c_[0] = LaurentPoly(1);
    return h;
  }
  static HeckeElt basis(const WeylElement& w) {
    HeckeElt h(w.system());
    h.c_[w.id()] = LaurentPoly(1);
    return h;
  }
  static HeckeElt scalar(SystemPtr sys, LaurentPoly p) {
    HeckeElt h(std::move(sys));
    if (!p.is_zero()) h.c_[0] = std::move(p);
    return h;
  }

  const SystemPtr& system() const { return sys_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t support_size() const { return c_.size(); }
  /// Coefficients keyed by element id, ascending in the canonical order.
  const std::map<std::uint32_t, LaurentPoly>& terms() const { return c_; }

  LaurentPoly coeff(const WeylElement& w) const { return coeff_id(w.id()); }
  LaurentPoly coeff_id(std::uint32_t id) const {
    auto it = c_.find(id);
    return it == c_.end() ? LaurentPoly() : it->second;
  }
  std::vector<WeylElement> support() const {
    std::vector<WeylElement> out;
    for (const auto& [id, p] : c_) out.emplace_back(sys_, id);
    return out;
  }

  void add_term(std::uint32_t id, const LaurentPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(id, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  HeckeElt& operator+=(const HeckeElt& o) {
    check_same(o);
    for (const auto& [id, p] : o.c_) add_term(id, p);
    return *this;
  }
  HeckeElt& operator-=(const HeckeElt& o) {
    check_same(o);
    for (const auto& [id, p] : o.c_) add_term(id, -p);
    return *this;
  }
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& p, const HeckeElt& h) {
    HeckeElt out(h.sys_);
    if (p.is_zero()) return out;
    for (const auto& [id, q] : h.c_) out.c_[id] = p * q;
    return out;
  }

  bool operator==(const HeckeElt& o) const {
    check_same(o);
    return c_ == o.c_;
  }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

private:
  void check_same(const HeckeElt& o) const {
    if (sys_.get() != o.sys_.get())
      throw MixedSystems("Hecke elements over different systems");
  }

  SystemPtr sys_;
  std::map<std::uint32_t, LaurentPoly> c_;
};

namespace detail {

inline const LaurentPoly& alpha() {  // v^-1 - v
  static const LaurentPoly a = LaurentPoly::v(-1) - LaurentPoly::v(1);
  return a;
}
inline const LaurentPoly& alpha_inv() {  // v - v^-1
  static const LaurentPoly a = LaurentPoly::v(1) - LaurentPoly::v(-1);
  return a;
}

}  // namespace detail

/// h * H_s (right multiplication by a generator).
inline HeckeElt mul_gen_right(const HeckeElt& h, int s) {
  const auto& sys = h.system();
  HeckeElt out(sys);
  for (const auto& [id, p] : h.terms()) {
    std::uint32_t xs = sys->id_mul_gen_right(id, s);
    out.add_term(xs, p);
    if (sys->id_length(xs) < sys->id_length(id)) out.add_term(id, detail::alpha() * p);
  }
  return out;
}

/// h * H_s^-1.
inline HeckeElt mul_gen_right_inv(const HeckeElt& h, int s) {
  HeckeElt out = mul_gen_right(h, s);
  out += detail::alpha_inv() * h;
  return out;
}

/// H_s * h (left multiplication by a generator).
inline HeckeElt mul_gen_left(int s, const HeckeElt& h) {
  const auto& sys = h.system();
  HeckeElt out(sys);
  for (const auto& [id, p] : h.terms()) {
    std::uint32_t sx = sys->id_mul_gen_left(id, s);
    out.add_term(sx, p);
    if (sys->id_length(sx) < sys->id_length(id)) out.add_term(id, detail::alpha() * p);
  }
  return out;
}

/// H_s^-1 * h.
inline HeckeElt mul_gen_left_inv(int s, const HeckeElt& h) {
  HeckeElt out = mul_gen_left(s, h);
  out += detail::alpha_inv() * h;
  return out;
}

/// h * H_w along a reduced word of w.
inline HeckeElt mul_basis_right(HeckeElt h, std::uint32_t w_id) {
  const auto sys = h.system();
  for (std::uint8_t s : sys->id_word(w_id)) h = mul_gen_right(h, s);
  return h;
}

/// H_w * h along a reduced word of w.
inline HeckeElt mul_basis_left(std::uint32_t w_id, HeckeElt h) {
  const auto sys = h.system();
  const auto& word = sys->id_word(w_id);
  for (auto it = word.rbegin(); it != word.rend(); ++it) h = mul_gen_left(*it, h);
  return h;
}

/// Product a * b. Walks the canonical-word prefix tree spanned by the
/// support of b so shared word prefixes are multiplied once.
inline HeckeElt h_mul(const HeckeElt& a, const HeckeElt& b) {
  if (a.system().get() != b.system().get())
    throw MixedSystems("Hecke product over different systems");
  const auto& sys = a.system();
  HeckeElt out(sys);
  if (a.is_zero() || b.is_zero()) return out;

  std::vector<std::uint8_t> in_closure(sys->group_order(), 0);
  for (const auto& [id, p] : b.terms()) {
    std::uint32_t cur = id;
    while (!in_closure[cur]) {
      in_closure[cur] = 1;
      const auto& w = sys->id_word(cur);
      if (w.empty()) break;
      cur = sys->id_mul_gen_right(cur, w.back());
    }
  }

  struct Frame {
    std::uint32_t node;
    HeckeElt value;
    std::size_t next_child = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({0, a, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_child == 0) {
      auto it = b.terms().find(f.node);
      if (it != b.terms().end()) out += it->second * f.value;
    }
    const auto& children = sys->tree_children(f.node);
    std::size_t i = f.next_child;
    while (i < children.size() && !in_closure[children[i].second]) ++i;
    if (i == children.size()) {
      stack.pop_back();
      continue;
    }
    f.next_child = i + 1;
    Frame child{children[i].second, mul_gen_right(f.value, children[i].first), 0};
    stack.push_back(std::move(child));
  }
  return out;
}

namespace detail {

/// Per-system cache: rows of (H_w)^-1 in the standard basis and, for groups
/// up to expansion_cache_limit, the costandard-basis expansions of every H_w.
struct HeckeCache {
  std::mutex mu;
  bool inv_rows_built = false;
  std::vector<std::map<std::uint32_t, LaurentPoly>> inv_rows;
  bool expansions_built = false;
  std::vector<std::map<std::uint32_t, LaurentPoly>> expansion_rows;
  static constexpr std::size_t expansion_cache_limit = 1200;
};

inline void build_inv_rows(const SystemPtr& sys, HeckeCache& cache) {
  const std::size_t N = sys->group_order();
  cache.inv_rows.assign(N, {});
  // DFS over the canonical-word prefix tree: H_w = H_parent * H_s, hence
  // (H_w)^-1 = H_s^-1 * (H_parent)^-1.
  struct Frame {
    std::uint32_t node;
    std::size_t next_child = 0;
  };
  std::vector<HeckeElt> vals;
  vals.push_back(HeckeElt::unit(sys));
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_child == 0) {
      for (const auto& [id, p] : vals.back().terms()) cache.inv_rows[f.node][id] = p;
    }
    const auto& children = sys->tree_children(f.node);
    if (f.next_child == children.size()) {
      stack.pop_back();
      vals.pop_back();
      continue;
    }
    auto [s, child] = children[f.next_child++];
    vals.push_back(mul_gen_left_inv(s, vals.back()));
    stack.push_back({child, 0});
  }
  cache.inv_rows_built = true;
}

inline std::shared_ptr<HeckeCache> hecke_cache(const SystemPtr& sys) {
  auto cache = sys->cache_slot<HeckeCache>();
  std::scoped_lock lk(cache->mu);
  if (!cache->inv_rows_built) build_inv_rows(sys, *cache);
  return cache;
}

}  // namespace detail

/// (H_w)^-1, the product of H_s^-1 over a reduced word of w reversed.
inline HeckeElt h_inv_standard(const WeylElement& w) {
  auto cache = detail::hecke_cache(w.system());
  HeckeElt out(w.system());
  for (const auto& [id, p] : cache->inv_rows[w.id()]) out.add_term(id, p);
  return out;
}

/// Costandard class of w: (H_{w^-1})^-1. Unitriangular against the standard
/// basis with support in the Bruhat lower set of w.
inline HeckeElt costandard(const WeylElement& w) { return h_inv_standard(w.inverse()); }

/// Coefficients of h in the costandard basis.
struct CostandardExpansion {
  SystemPtr sys;
  std::map<std::uint32_t, LaurentPoly> coeff;

  bool operator==(const CostandardExpansion& o) const { return coeff == o.coeff; }
  std::vector<WeylElement> support() const {
    std::vector<WeylElement> out;
    for (const auto& [id, p] : coeff) out.emplace_back(sys, id);
    return out;
  }
};

namespace detail {

inline std::map<std::uint32_t, LaurentPoly> expand_against_rows(
    const SystemPtr& sys, HeckeCache& cache, const std::map<std::uint32_t, LaurentPoly>& h) {
  // Back-substitution along the canonical order reversed (length descending,
  // ties by canonical word): the costandard basis is unitriangular with
  // Bruhat-lower (hence length-lower) support.
  std::map<std::uint32_t, LaurentPoly> out;
  std::map<std::uint32_t, LaurentPoly> work = h;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    std::uint32_t x = it->first;
    LaurentPoly d = std::move(it->second);
    work.erase(it);
    if (d.is_zero()) continue;
    const auto& row = cache.inv_rows[sys->id_inverse(x)];  // costandard(x)
    for (const auto& [y, p] : row) {
      if (y == x) continue;
      auto [wit, inserted] = work.try_emplace(y, LaurentPoly());
      wit->second -= d * p;
      if (wit->second.is_zero()) work.erase(wit);
    }
    out[x] = std::move(d);
  }
  return out;
}

inline void build_expansions(const SystemPtr& sys, HeckeCache& cache) {
  const std::size_t N = sys->group_order();
  cache.expansion_rows.assign(N, {});
  for (std::uint32_t w = 0; w < N; ++w) {
    std::map<std::uint32_t, LaurentPoly> h;
    h[w] = LaurentPoly(1);
    cache.expansion_rows[w] = expand_against_rows(sys, cache, h);
  }
  cache.expansions_built = true;
}

}  // namespace detail

/// Expand h over the costandard basis; exact by unitriangularity.
inline CostandardExpansion expand_costandard(const HeckeElt& h) {
  const auto& sys = h.system();
  auto cache = detail::hecke_cache(sys);
  std::scoped_lock lk(cache->mu);
  CostandardExpansion out{sys, {}};
  if (sys->group_order() <= detail::HeckeCache::expansion_cache_limit) {
    if (!cache->expansions_built) detail::build_expansions(sys, *cache);
    for (const auto& [w, c] : h.terms())
      for (const auto& [x, p] : cache->expansion_rows[w]) {
        auto [it, inserted] = out.coeff.try_emplace(x, LaurentPoly());
        it->second += c * p;
        if (it->second.is_zero()) out.coeff.erase(it);
      }
  } else {
    out.coeff = detail::expand_against_rows(sys, *cache, h.terms());
  }
  return out;
}

/// Reassemble sum d_w * costandard(w) from expansion coefficients.
inline HeckeElt assemble_costandard(const CostandardExpansion& e) {
  HeckeElt out(e.sys);
  for (const auto& [w, d] : e.coeff)
    out += d * costandard(WeylElement(e.sys, w));
  return out;
}

/// Image of a braid word under sigma_i -> H_{s_i}; invariant under braid
/// equivalence, so it factors through the Garside normal form.
inline HeckeElt eval_braid(const SystemPtr& sys, const BraidWord& word) {
  HeckeElt out = HeckeElt::unit(sys);
  for (const auto& letter : word) {
    if (letter.gen < 0 || letter.gen >= sys->rank())
      throw InvalidGenerator("braid letter " + std::to_string(letter.gen + 1) +
                             " out of range for rank " + std::to_string(sys->rank()));
    out = letter.sign > 0 ? mul_gen_right(out, letter.gen)
                          : mul_gen_right_inv(out, letter.gen);
  }
  return out;
}

/// Class of the full twist of the parabolic W_I: H_{w0I} * H_{w0I}.
inline HeckeElt full_twist_class(const SystemPtr& sys, GenMask I) {
  std::uint32_t w0I = longest_element(sys, I).id();
  return mul_basis_right(mul_basis_right(HeckeElt::unit(sys), w0I), w0I);
}

// --- textual rendering -------------------------------------------------

/// Deterministic rendering: terms in canonical element order; the identity
/// term prints as a bare Laurent polynomial, every other term as
/// coefficient·H[word], e.g. "1 + (v^-1 - v)·H[1]".
inline std::string hecke_str(const HeckeElt& h) {
  if (h.is_zero()) return "0";
  const auto& sys = h.system();
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, p] : h.terms()) {
    if (!first) os << " + ";
    if (id == 0) {
      bool needs_parens = p.term_count() > 1 && h.terms().size() > 1;
      os << (needs_parens ? "(" + p.str() + ")" : p.str());
    } else {
      std::string word = WeylElement(sys, id).word_str();
      if (p.is_one())
        os << "H[" << word << "]";
      else if (p == LaurentPoly(-1))
        os << "-H[" << word << "]";
      else if (p.term_count() == 1)
        os << p.str() << "·H[" << word << "]";
      else
        os << "(" << p.str() << ")·H[" << word << "]";
    }
    first = false;
  }
  return os.str();
}

/// Parse the output of hecke_str back into an element of the given system.
inline HeckeElt hecke_parse(const SystemPtr& sys, std::string_view text) {
  detail::TextCursor c{text};
  HeckeElt out(sys);
  if (c.done()) throw ParseError("empty Hecke element");
  {
    std::size_t save = c.pos;
    if (c.eat('0') && c.done()) return out;
    c.pos = save;
  }
  bool expect_term = true;
  while (expect_term) {
    int sign = 1;
    if (c.eat('-')) sign = -1;
    LaurentPoly coeff;
    bool have_coeff = false;
    if (c.peek() == '(') {
      c.eat('(');
      // find matching ')' and parse the inside as a Laurent polynomial
      std::size_t depth = 1, start = c.pos, end = c.pos;
      while (end < c.s.size() && depth) {
        if (c.s[end] == '(') ++depth;
        if (c.s[end] == ')') --depth;
        if (depth) ++end;
      }
      if (depth) throw ParseError("unbalanced parentheses");
      coeff = LaurentPoly::parse(c.s.substr(start, end - start));
      c.pos = end + 1;
      have_coeff = true;
      c.eat_dot();
    } else if (c.peek() != 'H') {
      detail::TextCursor probe = c;
      coeff = detail::parse_laurent_monomial(probe, 1);
      c.pos = probe.pos;
      have_coeff = true;
      c.eat_dot();
    }
    if (c.peek() == 'H') {
      c.eat('H');
      if (!c.eat('[')) throw ParseError("expected '[' after H");
      std::vector<int> word;
      while (!c.eat(']')) {
        long letter = c.read_int();
        if (letter <= 0 || letter > sys->rank())
          throw ParseError("generator index out of range in H[..]");
        word.push_back(static_cast<int>(letter) - 1);
      }
      WeylElement w = sys->from_word(word);
      if (static_cast<std::size_t>(w.length()) != word.size())
        throw ParseError("word in H[..] is not reduced");
      if (!have_coeff) coeff = LaurentPoly(1);
      out.add_term(w.id(), sign < 0 ? -coeff : coeff);
    } else {
      if (!have_coeff) throw ParseError("expected term");
      out.add_term(0, sign < 0 ? -coeff : coeff);
    }
    expect_term = false;
    c.skip_ws();
    if (c.eat('+'))
      expect_term = true;
    else if (!c.done() && c.peek() == '-')
      expect_term = true;  // the '-' is consumed as the next term's sign
  }
  if (!c.done()) throw ParseError("trailing junk in Hecke element");
  return out;
}

}  // namespace heckelab
