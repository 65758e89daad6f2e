#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "heckelab/errors.hpp"

namespace heckelab {

/// Coxeter bond matrix: m_ii = 1, m_ij in {2,3,4,6} off the diagonal.
using Bonds = std::vector<std::vector<int>>;

/// Square integer matrix, row-major, acting on root-lattice coordinates.
using Mat = std::vector<long long>;

/// Root vector in simple-root coordinates.
using RootVec = std::vector<long long>;

/// Generator subset as a bitmask over {0..rank-1}.
using GenMask = std::uint32_t;

class WeylElement;
class ParabolicSubset;

/// Safety bounds for system construction and enumeration.
struct SystemOptions {
  std::size_t max_positive_roots = 20000;
  std::size_t max_group_order = 1200000;
};

namespace detail {
struct MatHash {
  std::size_t operator()(const Mat& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (long long x : m) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};
}  // namespace detail

/// A finite Weyl group presented by its bond matrix and realized exactly on
/// the root lattice. The full element table, Cayley graph and Bruhat order
/// are materialized lazily on first use; elements are then numbered in a
/// canonical order (by length, then lexicographically by canonical reduced
/// word), which every deterministic rendering in the library relies on.
class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
public:
  using Options = SystemOptions;

  static std::shared_ptr<const CoxeterSystem> build(const Bonds& bonds,
                                                    std::string name = "",
                                                    Options opt = Options{});

  /// Named types "A<n>", "B<n>", "D<n>", "G2", "F4" and products joined by
  /// "x", e.g. "A2xA1".
  static std::shared_ptr<const CoxeterSystem> named(const std::string& name,
                                                    Options opt = Options{});

  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  const Bonds& bond_matrix() const { return bonds_; }
  const Options& options() const { return opt_; }
  int bond(int i, int j) const { return bonds_[i][j]; }

  const std::vector<RootVec>& positive_roots() const { return pos_roots_; }
  /// Matrix of the simple reflection s on the root lattice.
  const Mat& simple_reflection_action(int s) const { return gen_mats_[s]; }

  GenMask full_mask() const {
    return rank_ >= 32 ? ~GenMask(0) : (GenMask(1) << rank_) - 1;
  }

  // --- element access (materializes the group on first use) ---------------

  std::size_t group_order() const {
    ensure_elements();
    return reg_.elems.size();
  }
  WeylElement identity() const;
  WeylElement simple(int s) const;
  WeylElement longest_element() const;
  WeylElement element_at(std::uint32_t id) const;
  WeylElement from_word(std::span<const int> word) const;
  std::vector<WeylElement> elements() const;

  // --- id-level API (used by the braid/Hecke layers) ----------------------

  std::uint32_t id_identity() const { return 0; }
  std::uint32_t id_w0() const {
    ensure_elements();
    return reg_.w0;
  }
  int id_length(std::uint32_t id) const {
    ensure_elements();
    return reg_.elems[id].len;
  }
  const std::vector<std::uint8_t>& id_word(std::uint32_t id) const {
    ensure_elements();
    return reg_.elems[id].word;
  }
  std::uint32_t id_inverse(std::uint32_t id) const {
    ensure_elements();
    return reg_.elems[id].inv;
  }
  GenMask id_left_descents(std::uint32_t id) const {
    ensure_elements();
    return reg_.elems[id].ldesc;
  }
  GenMask id_right_descents(std::uint32_t id) const {
    ensure_elements();
    return reg_.elems[id].rdesc;
  }
  std::uint32_t id_mul_gen_right(std::uint32_t id, int s) const {
    ensure_elements();
    return reg_.elems[id].rprod[s];
  }
  std::uint32_t id_mul_gen_left(std::uint32_t id, int s) const {
    ensure_elements();
    return reg_.elems[id].lprod[s];
  }
  std::uint32_t id_product(std::uint32_t a, std::uint32_t b) const {
    ensure_elements();
    std::uint32_t r = a;
    for (std::uint8_t s : reg_.elems[b].word) r = reg_.elems[r].rprod[s];
    return r;
  }
  const Mat& id_matrix(std::uint32_t id) const {
    ensure_elements();
    return reg_.elems[id].mat;
  }
  std::optional<std::uint32_t> id_of_matrix(const Mat& m) const {
    ensure_elements();
    auto it = reg_.index.find(m);
    if (it == reg_.index.end()) return std::nullopt;
    return it->second;
  }

  /// Children of id in the canonical-word prefix tree, as (letter, child id);
  /// the child's canonical word is the parent's with the letter appended.
  const std::vector<std::pair<std::uint8_t, std::uint32_t>>& tree_children(
      std::uint32_t id) const {
    ensure_elements();
    return reg_.children[id];
  }

  // --- Bruhat order --------------------------------------------------------

  bool id_bruhat_leq(std::uint32_t a, std::uint32_t b) const {
    ensure_bruhat();
    return bruhat_[static_cast<std::size_t>(b) * reg_.elems.size() + a] != 0;
  }
  std::vector<std::uint32_t> id_bruhat_lower_set(std::uint32_t w) const {
    ensure_bruhat();
    std::vector<std::uint32_t> out;
    const std::size_t n = reg_.elems.size();
    for (std::uint32_t u = 0; u < n; ++u)
      if (bruhat_[static_cast<std::size_t>(w) * n + u]) out.push_back(u);
    return out;
  }

  // --- per-system cache slot (used by the Hecke layer) ---------------------

  template <class T>
  std::shared_ptr<T> cache_slot() const {
    std::scoped_lock lk(slot_mu_);
    if (!hecke_slot_) hecke_slot_ = std::make_shared<T>();
    return std::static_pointer_cast<T>(hecke_slot_);
  }

private:
  CoxeterSystem() = default;

  struct ElemData {
    Mat mat;
    int len = 0;
    std::vector<std::uint8_t> word;  // lexicographically least reduced word
    std::uint32_t inv = 0;
    GenMask ldesc = 0, rdesc = 0;
    std::vector<std::uint32_t> rprod, lprod;  // products with generators
  };
  struct Registry {
    std::vector<ElemData> elems;
    std::unordered_map<Mat, std::uint32_t, detail::MatHash> index;
    std::uint32_t w0 = 0;
    std::vector<std::vector<std::pair<std::uint8_t, std::uint32_t>>> children;
  };

  Mat identity_matrix() const {
    Mat m(static_cast<std::size_t>(rank_) * rank_, 0);
    for (int i = 0; i < rank_; ++i) m[static_cast<std::size_t>(i) * rank_ + i] = 1;
    return m;
  }
  Mat mat_mul(const Mat& a, const Mat& b) const {
    const int n = rank_;
    Mat r(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        long long aik = a[static_cast<std::size_t>(i) * n + k];
        if (aik == 0) continue;
        for (int j = 0; j < n; ++j)
          r[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
      }
    return r;
  }
  RootVec apply(const Mat& m, const RootVec& x) const {
    const int n = rank_;
    RootVec r(n, 0);
    for (int i = 0; i < n; ++i) {
      long long acc = 0;
      for (int j = 0; j < n; ++j) acc += m[static_cast<std::size_t>(i) * n + j] * x[j];
      r[i] = acc;
    }
    return r;
  }
  static bool is_negative_root(const RootVec& x) {
    for (long long c : x)
      if (c < 0) return true;
    return false;
  }
  int length_of(const Mat& m) const {
    int len = 0;
    for (const auto& alpha : pos_roots_)
      if (is_negative_root(apply(m, alpha))) ++len;
    return len;
  }

  void validate_bonds() const;
  void build_roots();
  void ensure_elements() const;
  void ensure_bruhat() const;

  int rank_ = 0;
  Bonds bonds_;
  std::string name_;
  Options opt_;
  std::vector<std::vector<long long>> cartan_;  // cartan_[i][j] = <alpha_j, alpha_i^vee>
  std::vector<Mat> gen_mats_;
  std::vector<RootVec> pos_roots_;

  mutable std::mutex reg_mu_;
  mutable std::atomic<bool> reg_ready_{false};
  mutable Registry reg_;

  mutable std::mutex bruhat_mu_;
  mutable std::atomic<bool> bruhat_ready_{false};
  mutable std::vector<std::uint8_t> bruhat_;

  mutable std::mutex slot_mu_;
  mutable std::shared_ptr<void> hecke_slot_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

/// Handle to a group element of a CoxeterSystem. Cheap to copy; all data
/// lives in the system's element table.
class WeylElement {
public:
  WeylElement() = default;
  WeylElement(SystemPtr sys, std::uint32_t id) : sys_(std::move(sys)), id_(id) {}

  const SystemPtr& system() const { return sys_; }
  std::uint32_t id() const { return id_; }

  int length() const { return sys_->id_length(id_); }
  bool is_identity() const { return id_ == 0; }

  /// Lexicographically least reduced word (0-based generator indices).
  std::vector<int> canonical_word() const {
    const auto& w = sys_->id_word(id_);
    return std::vector<int>(w.begin(), w.end());
  }
  GenMask left_descent_mask() const { return sys_->id_left_descents(id_); }
  GenMask right_descent_mask() const { return sys_->id_right_descents(id_); }
  std::vector<int> left_descents() const { return mask_to_list(left_descent_mask()); }
  std::vector<int> right_descents() const { return mask_to_list(right_descent_mask()); }

  const Mat& action() const { return sys_->id_matrix(id_); }

  WeylElement inverse() const { return {sys_, sys_->id_inverse(id_)}; }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    if (a.sys_.get() != b.sys_.get())
      throw MixedSystems("product of elements from different systems");
    return {a.sys_, a.sys_->id_product(a.id_, b.id_)};
  }
  bool operator==(const WeylElement& o) const {
    if (sys_.get() != o.sys_.get())
      throw MixedSystems("comparison of elements from different systems");
    return id_ == o.id_;
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  /// Canonical order: by length, then canonical word; ids realize it.
  bool operator<(const WeylElement& o) const {
    if (sys_.get() != o.sys_.get())
      throw MixedSystems("comparison of elements from different systems");
    return id_ < o.id_;
  }

  /// "e" or 1-based letters, e.g. "1 2 1".
  std::string word_str() const {
    const auto& w = sys_->id_word(id_);
    if (w.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << ' ';
      os << int(w[i]) + 1;
    }
    return os.str();
  }

private:
  static std::vector<int> mask_to_list(GenMask m) {
    std::vector<int> out;
    for (int s = 0; m; ++s, m >>= 1)
      if (m & 1) out.push_back(s);
    return out;
  }

  SystemPtr sys_;
  std::uint32_t id_ = 0;
};

inline WeylElement CoxeterSystem::identity() const {
  ensure_elements();
  return {shared_from_this(), 0};
}
inline WeylElement CoxeterSystem::simple(int s) const {
  ensure_elements();
  if (s < 0 || s >= rank_)
    throw InvalidGenerator("generator index " + std::to_string(s) + " out of range");
  // the length-1 layer sits right after the identity, ordered by letter
  return {shared_from_this(), static_cast<std::uint32_t>(1 + s)};
}
inline WeylElement CoxeterSystem::longest_element() const {
  ensure_elements();
  return {shared_from_this(), reg_.w0};
}
inline WeylElement CoxeterSystem::element_at(std::uint32_t id) const {
  ensure_elements();
  if (id >= reg_.elems.size()) throw Error("element id out of range");
  return {shared_from_this(), id};
}
inline WeylElement CoxeterSystem::from_word(std::span<const int> word) const {
  ensure_elements();
  std::uint32_t id = 0;
  for (int s : word) {
    if (s < 0 || s >= rank_)
      throw InvalidGenerator("generator index " + std::to_string(s) + " out of range");
    id = reg_.elems[id].rprod[s];
  }
  return {shared_from_this(), id};
}
inline std::vector<WeylElement> CoxeterSystem::elements() const {
  ensure_elements();
  std::vector<WeylElement> out;
  out.reserve(reg_.elems.size());
  for (std::uint32_t id = 0; id < reg_.elems.size(); ++id)
    out.emplace_back(shared_from_this(), id);
  return out;
}

inline void CoxeterSystem::validate_bonds() const {
  const std::size_t n = bonds_.size();
  if (n != static_cast<std::size_t>(rank_)) throw MalformedMatrix("rank mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (bonds_[i].size() != n) throw MalformedMatrix("bond matrix is not square");
    if (bonds_[i][i] != 1) throw MalformedMatrix("diagonal bond entries must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (bonds_[i][j] != bonds_[j][i]) throw MalformedMatrix("bond matrix is not symmetric");
      if (i != j && bonds_[i][j] != 2 && bonds_[i][j] != 3 && bonds_[i][j] != 4 &&
          bonds_[i][j] != 6)
        throw MalformedMatrix("off-diagonal bonds must lie in {2,3,4,6}");
    }
  }
}

inline void CoxeterSystem::build_roots() {
  const int n = rank_;
  // Crystallographic Cartan integers: for i<j the pair (c_ij, c_ji) is
  // (0,0), (-1,-1), (-1,-2), (-1,-3) for bonds 2,3,4,6.
  cartan_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      switch (bonds_[i][j]) {
        case 2: cartan_[i][j] = 0; break;
        case 3: cartan_[i][j] = -1; break;
        case 4: cartan_[i][j] = (i < j) ? -1 : -2; break;
        case 6: cartan_[i][j] = (i < j) ? -1 : -3; break;
      }
    }
  gen_mats_.clear();
  for (int s = 0; s < n; ++s) {
    Mat m = identity_matrix();
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(s) * n + j] = (j == s) ? -1 : -cartan_[s][j];
    gen_mats_.push_back(std::move(m));
  }

  // Closure of the simple roots under the simple reflections. A closure
  // larger than the bound flags a non-spherical (or oversized) system.
  std::set<RootVec> roots;
  std::vector<RootVec> queue;
  for (int i = 0; i < n; ++i) {
    RootVec alpha(n, 0);
    alpha[i] = 1;
    roots.insert(alpha);
    queue.push_back(alpha);
  }
  const std::size_t bound = 2 * opt_.max_positive_roots;
  while (!queue.empty()) {
    RootVec r = std::move(queue.back());
    queue.pop_back();
    for (int s = 0; s < n; ++s) {
      RootVec img = apply(gen_mats_[s], r);
      if (roots.insert(img).second) {
        if (roots.size() > bound)
          throw NonSpherical("root closure exceeds bound for '" + name_ +
                             "'; system is not finite (or raise max_positive_roots)");
        queue.push_back(std::move(img));
      }
    }
  }
  pos_roots_.clear();
  for (const auto& r : roots)
    if (!is_negative_root(r)) pos_roots_.push_back(r);
  // sanity: every root is all-nonnegative or all-nonpositive, and each
  // simple reflection negates exactly its own simple root among positives
  if (2 * pos_roots_.size() != roots.size())
    throw Error("internal: root system is not symmetric");
  for (int s = 0; s < n; ++s) {
    int negated = 0;
    for (const auto& alpha : pos_roots_) {
      RootVec img = apply(gen_mats_[s], alpha);
      if (roots.find(img) == roots.end())
        throw Error("internal: simple reflection does not permute the roots");
      if (is_negative_root(img)) ++negated;
    }
    if (negated != 1)
      throw Error("internal: simple reflection must negate exactly one positive root");
  }
}

inline void CoxeterSystem::ensure_elements() const {
  if (reg_ready_.load(std::memory_order_acquire)) return;
  std::scoped_lock lk(reg_mu_);
  if (reg_ready_.load(std::memory_order_relaxed)) return;

  const int n = rank_;
  Registry reg;
  std::unordered_map<Mat, std::uint32_t, detail::MatHash> seen;

  // BFS by length; each layer is sorted by canonical word so that the final
  // numbering is by (length, canonical word).
  struct Pending {
    Mat mat;
    std::vector<std::uint8_t> word;
  };
  std::vector<Pending> layer;
  layer.push_back({identity_matrix(), {}});
  seen.emplace(layer[0].mat, 0);

  auto canonical_word_of = [&](const Mat& m, int len) {
    std::vector<std::uint8_t> word;
    Mat cur = m;
    int cur_len = len;
    while (cur_len > 0) {
      for (int s = 0; s < n; ++s) {
        Mat next = mat_mul(gen_mats_[s], cur);  // s * cur
        int nl = length_of(next);
        if (nl < cur_len) {
          word.push_back(static_cast<std::uint8_t>(s));
          cur = std::move(next);
          cur_len = nl;
          break;
        }
      }
    }
    return word;
  };

  std::size_t count = 0;
  while (!layer.empty()) {
    for (auto& p : layer) p.word = canonical_word_of(p.mat, length_of(p.mat));
    std::sort(layer.begin(), layer.end(),
              [](const Pending& a, const Pending& b) { return a.word < b.word; });
    std::vector<Pending> next;
    for (auto& p : layer) {
      ElemData d;
      d.len = static_cast<int>(p.word.size());
      d.word = p.word;
      d.mat = p.mat;
      std::uint32_t id = static_cast<std::uint32_t>(reg.elems.size());
      reg.index.emplace(d.mat, id);
      reg.elems.push_back(std::move(d));
      ++count;
      if (count > opt_.max_group_order)
        throw GroupOrderExceedsCap("group order exceeds cap (" +
                                   std::to_string(opt_.max_group_order) + ") for '" +
                                   name_ + "'");
    }
    // expand: right-multiply the layer by non-descent generators
    for (auto& p : layer) {
      for (int s = 0; s < n; ++s) {
        Mat prod = mat_mul(p.mat, gen_mats_[s]);
        if (length_of(prod) <= static_cast<int>(p.word.size())) continue;
        if (seen.emplace(prod, 0).second) next.push_back({std::move(prod), {}});
      }
    }
    layer = std::move(next);
  }

  const std::size_t N = reg.elems.size();
  // Cayley tables, descents, inverses, canonical prefix tree
  for (std::size_t id = 0; id < N; ++id) {
    auto& d = reg.elems[id];
    d.rprod.resize(n);
    d.lprod.resize(n);
    for (int s = 0; s < n; ++s) {
      d.rprod[s] = reg.index.at(mat_mul(d.mat, gen_mats_[s]));
      d.lprod[s] = reg.index.at(mat_mul(gen_mats_[s], d.mat));
    }
    for (int s = 0; s < n; ++s) {
      if (reg.elems[d.rprod[s]].len < d.len) d.rdesc |= GenMask(1) << s;
      if (reg.elems[d.lprod[s]].len < d.len) d.ldesc |= GenMask(1) << s;
    }
  }
  for (std::size_t id = 0; id < N; ++id) {
    std::uint32_t inv = 0;
    const auto& w = reg.elems[id].word;
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv = reg.elems[inv].rprod[*it];
    reg.elems[id].inv = inv;
  }
  reg.children.assign(N, {});
  for (std::uint32_t id = 1; id < N; ++id) {
    std::uint8_t last = reg.elems[id].word.back();
    std::uint32_t parent = reg.elems[id].rprod[last];
    reg.children[parent].emplace_back(last, id);
  }
  for (auto& ch : reg.children)
    std::sort(ch.begin(), ch.end());

  // the longest element: unique element of maximal length
  int maxlen = 0;
  for (const auto& e : reg.elems) maxlen = std::max(maxlen, e.len);
  std::vector<std::uint32_t> longest;
  for (std::uint32_t id = 0; id < N; ++id)
    if (reg.elems[id].len == maxlen) longest.push_back(id);
  if (longest.size() != 1) throw Error("internal: longest element is not unique");
  reg.w0 = longest[0];
  if (static_cast<std::size_t>(maxlen) != pos_roots_.size())
    throw Error("internal: l(w0) does not match the number of positive roots");

  reg_ = std::move(reg);
  reg_ready_.store(true, std::memory_order_release);
}

inline void CoxeterSystem::ensure_bruhat() const {
  ensure_elements();
  if (bruhat_ready_.load(std::memory_order_acquire)) return;
  std::scoped_lock lk(bruhat_mu_);
  if (bruhat_ready_.load(std::memory_order_relaxed)) return;

  const std::size_t N = reg_.elems.size();
  std::vector<std::uint8_t> table(N * N, 0);
  table[0] = 1;  // e <= e
  // Lifting-property recursion, computed bottom-up: with s a right descent
  // of w and w' = ws,  u <= w  iff  (us < u ? us <= w' : u <= w').
  for (std::uint32_t w = 1; w < N; ++w) {
    int s = std::countr_zero(reg_.elems[w].rdesc);
    std::uint32_t wp = reg_.elems[w].rprod[s];
    const std::uint8_t* row_wp = table.data() + static_cast<std::size_t>(wp) * N;
    std::uint8_t* row_w = table.data() + static_cast<std::size_t>(w) * N;
    for (std::uint32_t u = 0; u < N; ++u) {
      std::uint32_t probe = (reg_.elems[u].rdesc >> s) & 1 ? reg_.elems[u].rprod[s] : u;
      row_w[u] = row_wp[probe];
    }
    row_w[w] = 1;
  }
  bruhat_ = std::move(table);
  bruhat_ready_.store(true, std::memory_order_release);
}

inline std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(const Bonds& bonds,
                                                                 std::string name,
                                                                 Options opt) {
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  sys->rank_ = static_cast<int>(bonds.size());
  sys->bonds_ = bonds;
  sys->name_ = name.empty() ? "custom" : std::move(name);
  sys->opt_ = opt;
  sys->validate_bonds();
  sys->build_roots();
  return sys;
}

namespace detail {

inline void place_block(Bonds& bonds, const Bonds& block, std::size_t at) {
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = 0; j < block.size(); ++j) bonds[at + i][at + j] = block[i][j];
}

inline Bonds chain_bonds(int n, int last_bond = 3) {
  Bonds b(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) b[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) b[i][i + 1] = b[i + 1][i] = 3;
  if (n >= 2) b[n - 2][n - 1] = b[n - 1][n - 2] = last_bond;
  return b;
}

inline Bonds irreducible_bonds(char family, int n) {
  switch (family) {
    case 'A':
      if (n < 1) throw MalformedMatrix("A<n> needs n >= 1");
      return chain_bonds(n);
    case 'B':
      if (n < 2) throw MalformedMatrix("B<n> needs n >= 2");
      return chain_bonds(n, 4);
    case 'D': {
      if (n < 2) throw MalformedMatrix("D<n> needs n >= 2");
      Bonds b(n, std::vector<int>(n, 2));
      for (int i = 0; i < n; ++i) b[i][i] = 1;
      for (int i = 0; i + 1 < n - 1; ++i) b[i][i + 1] = b[i + 1][i] = 3;
      if (n >= 3) b[n - 3][n - 1] = b[n - 1][n - 3] = 3;
      return b;
    }
    case 'G':
      if (n != 2) throw MalformedMatrix("only G2 is defined");
      return {{1, 6}, {6, 1}};
    case 'F': {
      if (n != 4) throw MalformedMatrix("only F4 is defined");
      Bonds b = chain_bonds(4);
      b[1][2] = b[2][1] = 4;
      b[2][3] = b[3][2] = 3;
      return b;
    }
    default:
      throw MalformedMatrix(std::string("unknown type family '") + family + "'");
  }
}

inline Bonds bonds_from_name(const std::string& name) {
  std::vector<Bonds> blocks;
  std::size_t pos = 0;
  while (pos < name.size()) {
    std::size_t next = name.find('x', pos);
    std::string tok = name.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
      throw MalformedMatrix("bad type token '" + tok + "'");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    int n = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw MalformedMatrix("bad rank in type token '" + tok + "'");
      n = n * 10 + (tok[i] - '0');
    }
    blocks.push_back(irreducible_bonds(family, n));
    pos = next == std::string::npos ? name.size() : next + 1;
  }
  if (blocks.empty()) throw MalformedMatrix("empty type name");
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  Bonds bonds(total, std::vector<int>(total, 2));
  std::size_t at = 0;
  for (const auto& b : blocks) {
    place_block(bonds, b, at);
    at += b.size();
  }
  return bonds;
}

}  // namespace detail

inline std::shared_ptr<const CoxeterSystem> CoxeterSystem::named(const std::string& name,
                                                                 Options opt) {
  return build(detail::bonds_from_name(name), name, opt);
}

// --- free operations -------------------------------------------------------

inline bool bruhat_leq(const WeylElement& a, const WeylElement& b) {
  if (a.system().get() != b.system().get())
    throw MixedSystems("Bruhat comparison across systems");
  return a.system()->id_bruhat_leq(a.id(), b.id());
}

inline std::vector<WeylElement> bruhat_lower_set(const WeylElement& w) {
  std::vector<WeylElement> out;
  for (std::uint32_t id : w.system()->id_bruhat_lower_set(w.id()))
    out.emplace_back(w.system(), id);
  return out;
}

/// Longest element of the standard parabolic subgroup W_I.
inline WeylElement longest_element(const SystemPtr& sys, GenMask I);

/// Subset I of the generators with the induced parabolic data: the elements
/// of W_L, its longest element, and u = w0 * w0L^{-1} (the minimal-length
/// representative of the coset w0 W_L).
class ParabolicSubset {
public:
  ParabolicSubset(SystemPtr sys, GenMask mask) : sys_(std::move(sys)), mask_(mask) {
    if (mask_ & ~sys_->full_mask()) throw InvalidGenerator("parabolic mask out of range");
    const std::size_t N = sys_->group_order();
    std::vector<std::uint8_t> in(N, 0);
    std::vector<std::uint32_t> queue{0};
    in[0] = 1;
    while (!queue.empty()) {
      std::uint32_t w = queue.back();
      queue.pop_back();
      for (int s = 0; s < sys_->rank(); ++s) {
        if (!((mask_ >> s) & 1)) continue;
        std::uint32_t x = sys_->id_mul_gen_right(w, s);
        if (!in[x]) {
          in[x] = 1;
          queue.push_back(x);
        }
      }
    }
    for (std::uint32_t id = 0; id < N; ++id)
      if (in[id]) ids_.push_back(id);
    membership_ = std::move(in);
    w0L_ = ids_[0];
    for (std::uint32_t id : ids_)
      if (sys_->id_length(id) > sys_->id_length(w0L_)) w0L_ = id;
    u_ = sys_->id_product(sys_->id_w0(), sys_->id_inverse(w0L_));
    // forced by construction; a failure here is an implementation bug
    if (sys_->id_length(sys_->id_w0()) !=
        sys_->id_length(u_) + sys_->id_length(w0L_))
      throw Error("internal: l(w0) != l(u) + l(w0L)");
  }

  const SystemPtr& system() const { return sys_; }
  GenMask mask() const { return mask_; }
  const std::vector<std::uint32_t>& element_ids() const { return ids_; }
  bool contains_id(std::uint32_t id) const { return membership_[id] != 0; }

  std::vector<WeylElement> elements() const {
    std::vector<WeylElement> out;
    for (std::uint32_t id : ids_) out.emplace_back(sys_, id);
    return out;
  }
  WeylElement longest() const { return {sys_, w0L_}; }
  /// u = w0 * w0L^{-1}; satisfies l(w0) = l(u) + l(w0L).
  WeylElement u() const { return {sys_, u_}; }

private:
  SystemPtr sys_;
  GenMask mask_;
  std::vector<std::uint32_t> ids_;
  std::vector<std::uint8_t> membership_;
  std::uint32_t w0L_ = 0, u_ = 0;
};

inline WeylElement longest_element(const SystemPtr& sys, GenMask I) {
  return ParabolicSubset(sys, I).longest();
}

/// u = w0 * w0L^{-1}, the minimal-length representative of w0 W_L.
inline WeylElement w0_coset_rep(const SystemPtr& sys, GenMask I) {
  return ParabolicSubset(sys, I).u();
}

/// { w0 * u : u not in W_L }, ascending by canonical order.
inline std::vector<WeylElement> tau_set(const SystemPtr& sys, GenMask I) {
  ParabolicSubset P(sys, I);
  std::vector<WeylElement> out;
  const std::uint32_t w0 = sys->id_w0();
  std::vector<std::uint32_t> ids;
  for (std::uint32_t id = 0; id < sys->group_order(); ++id)
    if (!P.contains_id(id)) ids.push_back(sys->id_product(w0, id));
  std::sort(ids.begin(), ids.end());
  for (std::uint32_t id : ids) out.emplace_back(sys, id);
  return out;
}

/// True iff X is downward closed for the Bruhat order.
inline bool is_downward_closed(const SystemPtr& sys, const std::vector<WeylElement>& X) {
  std::vector<std::uint8_t> in(sys->group_order(), 0);
  for (const auto& x : X) {
    if (x.system().get() != sys.get()) throw MixedSystems("set element from another system");
    in[x.id()] = 1;
  }
  for (const auto& x : X)
    for (std::uint32_t y = 0; y < sys->group_order(); ++y)
      if (sys->id_bruhat_leq(y, x.id()) && !in[y]) return false;
  return true;
}

/// Render a generator subset as "{}" or "{1,3}" (1-based).
inline std::string mask_str(GenMask m) {
  std::string out = "{";
  bool first = true;
  for (int s = 0; m; ++s, m >>= 1)
    if (m & 1) {
      if (!first) out += ',';
      out += std::to_string(s + 1);
      first = false;
    }
  out += '}';
  return out;
}

}  // namespace heckelab
