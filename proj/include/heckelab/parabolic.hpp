#pragma once

#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "heckelab/coxeter.hpp"
#include "heckelab/hecke.hpp"

namespace heckelab {

/// Result of one checker run: failures are individual counterexamples, info
/// carries counts or probe findings. A checker never throws on a math
/// failure, so one counterexample cannot hide the others.
struct CheckOutcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string info;

  void fail(std::string msg) {
    pass = false;
    failures.push_back(std::move(msg));
  }
};

/// Everything attached to a parabolic subset I of a system: the Levi system
/// W_L realized as its own Coxeter system, the embedding of W_L into W, the
/// coset representative u, and the cached full-twist classes
/// ft_G, ft_L and ft_rel = ft_L^-1 * ft_G.
class ParabolicContext {
public:
  ParabolicContext(SystemPtr sys, GenMask mask)
      : sys_(std::move(sys)), subset_(sys_, mask) {
    gens_ = mask_to_list(mask);
    Bonds sub_bonds(gens_.size(), std::vector<int>(gens_.size(), 2));
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = 0; j < gens_.size(); ++j)
        sub_bonds[i][j] = sys_->bond(gens_[i], gens_[j]);
    levi_ = CoxeterSystem::build(sub_bonds, sys_->name() + "|" + mask_str(mask),
                                 sys_->options());

    const std::size_t M = levi_->group_order();
    sub_to_parent_.resize(M);
    parent_to_sub_.assign(sys_->group_order(), kNone);
    for (std::uint32_t sid = 0; sid < M; ++sid) {
      std::uint32_t pid = 0;
      for (std::uint8_t s : levi_->id_word(sid)) pid = sys_->id_mul_gen_right(pid, gens_[s]);
      sub_to_parent_[sid] = pid;
      parent_to_sub_[pid] = sid;
    }

    ft_g_ = full_twist_class(sys_, sys_->full_mask());
    ft_l_ = full_twist_class(sys_, mask);
    for (const auto& [id, p] : ft_l_.terms())
      if (!subset_.contains_id(id)) throw Error("internal: ft_L not supported on W_L");
    HeckeElt w0l_inv = h_inv_standard(subset_.longest());
    ft_l_inv_ = h_mul(w0l_inv, w0l_inv);
    ft_rel_ = h_mul(ft_l_inv_, ft_g_);
    HeckeElt w0_inv = h_inv_standard(sys_->longest_element());
    ft_rel_inv_ = h_mul(h_mul(w0_inv, w0_inv), ft_l_);
  }

  const SystemPtr& group() const { return sys_; }
  const SystemPtr& levi() const { return levi_; }
  const ParabolicSubset& subset() const { return subset_; }
  GenMask mask() const { return subset_.mask(); }
  std::string label() const { return mask_str(subset_.mask()); }

  WeylElement u() const { return subset_.u(); }
  const HeckeElt& ft_g() const { return ft_g_; }
  const HeckeElt& ft_l() const { return ft_l_; }
  const HeckeElt& ft_rel() const { return ft_rel_; }
  const HeckeElt& ft_rel_inv() const { return ft_rel_inv_; }

  WeylElement to_parent(const WeylElement& w) const {
    require_levi(w);
    return {sys_, sub_to_parent_[w.id()]};
  }
  WeylElement to_levi(const WeylElement& w) const {
    if (w.system().get() != sys_.get()) throw MixedSystems("element not over the parent group");
    std::uint32_t sid = parent_to_sub_[w.id()];
    if (sid == kNone)
      throw SupportOutsideParabolic("element " + w.word_str() + " lies outside W_L");
    return {levi_, sid};
  }

  /// Parabolic induction: relabel standard-basis coefficients along
  /// W_L -> W. Monoidal and fully faithful.
  HeckeElt incl(const HeckeElt& h) const {
    if (h.system().get() != levi_.get())
      throw MixedSystems("incl expects an element over the Levi system");
    HeckeElt out(sys_);
    for (const auto& [sid, p] : h.terms()) out.add_term(sub_to_parent_[sid], p);
    return out;
  }

  /// Reinterpret an element of H_G supported on W_L as an element of H_L.
  HeckeElt restrict_strict(const HeckeElt& h) const {
    require_parent(h);
    HeckeElt out(levi_);
    for (const auto& [pid, p] : h.terms()) {
      if (parent_to_sub_[pid] == kNone)
        throw SupportOutsideParabolic("support reaches outside W_L at " +
                                      WeylElement(sys_, pid).word_str());
      out.add_term(parent_to_sub_[pid], p);
    }
    return out;
  }

  /// Left-adjoint shadow: truncate standard-basis coefficients to W_L.
  HeckeElt proj_std(const HeckeElt& h) const {
    require_parent(h);
    HeckeElt out(levi_);
    for (const auto& [pid, p] : h.terms())
      if (parent_to_sub_[pid] != kNone) out.add_term(parent_to_sub_[pid], p);
    return out;
  }

  /// Right-adjoint shadow: truncate the costandard-basis expansion to W_L
  /// and reassemble it on the costandard classes of H_L.
  HeckeElt proj_cos(const HeckeElt& h) const {
    require_parent(h);
    CostandardExpansion e = expand_costandard(h);
    HeckeElt out(levi_);
    for (const auto& [pid, d] : e.coeff) {
      std::uint32_t sid = parent_to_sub_[pid];
      if (sid == kNone) continue;
      out += d * costandard(WeylElement(levi_, sid));
    }
    return out;
  }

  // --- checkers ------------------------------------------------------------

  /// Duality identity: proj_cos(H_w) = proj_std(ft_rel * H_w) for every w.
  /// The right-hand sides are produced by one walk of the canonical-word
  /// prefix tree so each generator step is taken once.
  CheckOutcome serre_duality() const {
    CheckOutcome out;
    const std::size_t N = sys_->group_order();
    struct Frame {
      std::uint32_t node;
      std::size_t next_child = 0;
    };
    std::vector<HeckeElt> vals{ft_rel_};
    std::vector<Frame> stack{{0, 0}};
    std::size_t checked = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_child == 0) {
        WeylElement w(sys_, f.node);
        HeckeElt lhs = proj_cos(HeckeElt::basis(w));
        HeckeElt rhs = proj_std(vals.back());
        ++checked;
        if (lhs != rhs)
          out.fail("w=[" + w.word_str() + "]: proj_cos(H_w) = " + hecke_str(lhs) +
                   " but proj_std(ft_rel*H_w) = " + hecke_str(rhs));
      }
      const auto& children = sys_->tree_children(f.node);
      if (f.next_child == children.size()) {
        stack.pop_back();
        vals.pop_back();
        continue;
      }
      auto [s, child] = children[f.next_child++];
      vals.push_back(mul_gen_right(vals.back(), s));
      stack.push_back({child, 0});
    }
    if (checked != N)
      out.fail("walk visited " + std::to_string(checked) + " of " + std::to_string(N) +
               " basis elements");
    out.info = std::to_string(checked) + " basis elements";
    return out;
  }

  /// Same identity on arbitrary elements (linearity spot-check).
  bool serre_duality_on(const HeckeElt& h) const {
    return proj_cos(h) == proj_std(h_mul(ft_rel_, h));
  }

  /// h - incl(proj_cos(h)) must lie in the costandard span of W \ W_L.
  bool recollement_on(const HeckeElt& h) const {
    HeckeElt rem = h - incl(proj_cos(h));
    CostandardExpansion e = expand_costandard(rem);
    for (const auto& [pid, d] : e.coeff)
      if (parent_to_sub_[pid] != kNone) return false;
    return true;
  }

  /// The full twist swaps the two kernels: for every u outside W_L,
  /// (a) H_w0 * costandard(u) = H_{w0 u},
  /// (b) ft_G * costandard(u) has standard support outside W_L,
  /// (c) tau = {w0 u} is Bruhat downward closed and carries the same
  ///     standard and costandard spans.
  CheckOutcome twist_kernel_swap() const {
    CheckOutcome out;
    const std::uint32_t w0 = sys_->id_w0();
    std::vector<std::uint8_t> in_tau(sys_->group_order(), 0);
    std::size_t complement = 0;
    for (std::uint32_t uid = 0; uid < sys_->group_order(); ++uid) {
      if (subset_.contains_id(uid)) continue;
      ++complement;
      in_tau[sys_->id_product(w0, uid)] = 1;
      WeylElement u(sys_, uid);
      HeckeElt nabla = costandard(u);
      HeckeElt shifted = mul_basis_left(w0, nabla);
      if (shifted != HeckeElt::basis(WeylElement(sys_, sys_->id_product(w0, uid))))
        out.fail("H_w0 * costandard([" + u.word_str() + "]) != H_[w0 u]; got " +
                 hecke_str(shifted));
      HeckeElt twisted = mul_basis_left(w0, shifted);  // ft_G * costandard(u)
      for (const auto& [pid, p] : twisted.terms())
        if (subset_.contains_id(pid)) {
          out.fail("ft_G * costandard([" + u.word_str() + "]) meets W_L at [" +
                   WeylElement(sys_, pid).word_str() + "]");
          break;
        }
    }
    // (c) downward closure of tau, then span agreement by unitriangularity
    for (std::uint32_t t = 0; t < sys_->group_order(); ++t) {
      if (!in_tau[t]) continue;
      for (std::uint32_t y = 0; y < sys_->group_order(); ++y)
        if (sys_->id_bruhat_leq(y, t) && !in_tau[y]) {
          out.fail("tau is not downward closed: [" + WeylElement(sys_, y).word_str() +
                   "] <= [" + WeylElement(sys_, t).word_str() + "] escapes");
          break;
        }
      HeckeElt nabla = costandard(WeylElement(sys_, t));
      for (const auto& [pid, p] : nabla.terms())
        if (!in_tau[pid]) {
          out.fail("costandard([" + WeylElement(sys_, t).word_str() +
                   "]) leaves the standard span of tau");
          break;
        }
      CostandardExpansion e = expand_costandard(HeckeElt::basis(WeylElement(sys_, t)));
      for (const auto& [pid, p] : e.coeff)
        if (!in_tau[pid]) {
          out.fail("H_[" + WeylElement(sys_, t).word_str() +
                   "] leaves the costandard span of tau");
          break;
        }
    }
    out.info = std::to_string(complement) + " complement elements";
    return out;
  }

  /// proj_std(ft_G) equals the full twist class of H_L.
  bool twist_restriction() const {
    return proj_std(ft_g_) == full_twist_class(levi_, levi_->full_mask());
  }

  /// costandard(u)^... the cone class c = (H_u)^-1 * (costandard(u) - H_u)
  /// expands inside {u^-1 v : v < u}, a window disjoint from W_L.
  CheckOutcome cone_containment() const {
    CheckOutcome out;
    WeylElement u = subset_.u();
    HeckeElt cone = costandard(u) - HeckeElt::basis(u);
    HeckeElt c = h_mul(h_inv_standard(u), cone);
    CostandardExpansion e = expand_costandard(c);
    std::vector<std::uint8_t> window(sys_->group_order(), 0);
    std::uint32_t uinv = sys_->id_inverse(u.id());
    for (std::uint32_t v = 0; v < sys_->group_order(); ++v)
      if (v != u.id() && sys_->id_bruhat_leq(v, u.id()))
        window[sys_->id_product(uinv, v)] = 1;
    for (const auto& [pid, d] : e.coeff)
      if (!window[pid])
        out.fail("cone class escapes the window at [" + WeylElement(sys_, pid).word_str() + "]");
    std::size_t window_size = 0;
    for (std::uint32_t x = 0; x < sys_->group_order(); ++x) {
      if (!window[x]) continue;
      ++window_size;
      if (subset_.contains_id(x))
        out.fail("window element [" + WeylElement(sys_, x).word_str() + "] lies in W_L");
    }
    out.info = "window size " + std::to_string(window_size);
    return out;
  }

  /// ft_rel maps the costandard span of the complement into the standard
  /// span of the complement, invertibly.
  CheckOutcome kernel_swap_invertible() const {
    CheckOutcome out;
    for (std::uint32_t uid = 0; uid < sys_->group_order(); ++uid) {
      if (subset_.contains_id(uid)) continue;
      WeylElement u(sys_, uid);
      HeckeElt fwd = h_mul(ft_rel_, costandard(u));
      for (const auto& [pid, p] : fwd.terms())
        if (subset_.contains_id(pid)) {
          out.fail("ft_rel * costandard([" + u.word_str() + "]) meets W_L");
          break;
        }
      CostandardExpansion back = expand_costandard(h_mul(ft_rel_inv_, HeckeElt::basis(u)));
      for (const auto& [pid, p] : back.coeff)
        if (subset_.contains_id(pid)) {
          out.fail("ft_rel^-1 * H_[" + u.word_str() + "] meets the costandard span of W_L");
          break;
        }
    }
    return out;
  }

private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  static std::vector<int> mask_to_list(GenMask m) {
    std::vector<int> out;
    for (int s = 0; m; ++s, m >>= 1)
      if (m & 1) out.push_back(s);
    return out;
  }
  void require_parent(const HeckeElt& h) const {
    if (h.system().get() != sys_.get())
      throw MixedSystems("expected an element over the parent group");
  }
  void require_levi(const WeylElement& w) const {
    if (w.system().get() != levi_.get())
      throw MixedSystems("expected an element of the Levi system");
  }

  SystemPtr sys_;
  ParabolicSubset subset_;
  std::vector<int> gens_;
  SystemPtr levi_;
  std::vector<std::uint32_t> sub_to_parent_;
  std::vector<std::uint32_t> parent_to_sub_;
  HeckeElt ft_g_, ft_l_, ft_l_inv_, ft_rel_, ft_rel_inv_;
};

}  // namespace heckelab
