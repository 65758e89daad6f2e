#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "heckelab/coxeter.hpp"
#include "heckelab/datum.hpp"
#include "heckelab/garside.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/parabolic.hpp"
#include "heckelab/report.hpp"

namespace heckelab {

enum class Suite { combinatorics, braid, hecke, serre };

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::combinatorics: return "combinatorics";
    case Suite::braid: return "braid";
    case Suite::hecke: return "hecke";
    case Suite::serre: return "serre";
  }
  return "?";
}

inline std::vector<std::string> default_roster(bool with_f4 = false) {
  std::vector<std::string> r{"A1", "A2", "A3", "A1xA1", "B2", "B3", "G2", "A4", "D4"};
  if (with_f4) r.push_back("F4");
  return r;
}

struct SuiteConfig {
  std::vector<std::string> systems;     // empty = default roster
  std::string parabolics = "all";       // "all" or "none;1;1,2"
  std::vector<Suite> suites;            // empty = all four
  std::uint64_t seed = 0;
  int jobs = 1;
  bool with_f4 = false;
  std::size_t max_group_order = 1200000;
  std::size_t random_words = 100;       // braid word pairs per system
  std::size_t random_elements = 50;     // random Hecke elements per context
};

inline std::vector<Suite> parse_suites(const std::string& text) {
  std::vector<Suite> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "all") return {Suite::combinatorics, Suite::braid, Suite::hecke, Suite::serre};
    if (tok == "combinatorics") out.push_back(Suite::combinatorics);
    else if (tok == "braid") out.push_back(Suite::braid);
    else if (tok == "hecke") out.push_back(Suite::hecke);
    else if (tok == "serre") out.push_back(Suite::serre);
    else throw ParseError("unknown suite '" + tok + "'");
  }
  if (out.empty()) throw ParseError("no suites selected");
  return out;
}

/// "all" -> every subset of S; otherwise semicolon-separated lists of
/// 1-based generator indices ("none" or "" for the empty subset).
inline std::vector<GenMask> parse_parabolics(const std::string& text, int rank) {
  std::vector<GenMask> out;
  if (text == "all") {
    GenMask full = rank >= 32 ? ~GenMask(0) : (GenMask(1) << rank) - 1;
    for (GenMask m = 0;; ++m) {
      out.push_back(m);
      if (m == full) break;
    }
    return out;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    GenMask m = 0;
    if (!(tok.empty() || tok == "none" || tok == "-")) {
      std::stringstream ts(tok);
      std::string num;
      while (std::getline(ts, num, ',')) {
        int idx = 0;
        try {
          idx = std::stoi(num);
        } catch (const std::exception&) {
          throw ParseError("bad generator index '" + num + "' in --parabolics");
        }
        if (idx < 1 || idx > rank)
          throw ParseError("generator index " + std::to_string(idx) + " out of range");
        m |= GenMask(1) << (idx - 1);
      }
    }
    out.push_back(m);
  }
  if (out.empty()) throw ParseError("no parabolic subsets selected");
  return out;
}

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Deterministic per-(system, suite) stream, independent of --jobs.
inline std::mt19937_64 task_rng(std::uint64_t seed, const std::string& system, Suite suite) {
  return std::mt19937_64(seed ^ fnv1a(system + "#" + suite_name(suite)));
}

inline BraidWord random_braid_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<int> gen_d(0, rank - 1);
  std::uniform_int_distribution<int> sign_d(0, 1);
  BraidWord w;
  int len = len_d(rng);
  for (int i = 0; i < len; ++i) w.push_back({gen_d(rng), sign_d(rng) ? +1 : -1});
  return w;
}

/// Random rewriting that preserves the braid class: free insertions,
/// commutation swaps, and full braid-relation replacements.
inline BraidWord rewrite_equivalent(std::mt19937_64& rng, const SystemPtr& sys, BraidWord w) {
  const int rank = sys->rank();
  std::uniform_int_distribution<int> op_d(0, 2);
  std::uniform_int_distribution<int> gen_d(0, rank - 1);
  std::uniform_int_distribution<int> sign_d(0, 1);
  for (int step = 0; step < 8; ++step) {
    int op = op_d(rng);
    if (op == 0) {  // insert a cancelling pair
      std::uniform_int_distribution<std::size_t> pos_d(0, w.size());
      std::size_t pos = pos_d(rng);
      int g = gen_d(rng);
      int s = sign_d(rng) ? +1 : -1;
      w.insert(w.begin() + static_cast<long>(pos), {BraidLetter{g, s}, BraidLetter{g, -s}});
    } else if (op == 1 && w.size() >= 2) {  // commutation move
      std::vector<std::size_t> spots;
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i].gen != w[i + 1].gen && sys->bond(w[i].gen, w[i + 1].gen) == 2)
          spots.push_back(i);
      if (!spots.empty()) {
        std::uniform_int_distribution<std::size_t> d(0, spots.size() - 1);
        std::size_t i = d(rng);
        std::swap(w[spots[i]], w[spots[i] + 1]);
      }
    } else if (op == 2 && w.size() >= 2) {  // braid-relation replacement
      std::vector<std::size_t> spots;  // starts of same-sign alternating runs of length m
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        int a = w[i].gen, b = w[i + 1].gen;
        if (a == b) continue;
        std::size_t m = static_cast<std::size_t>(sys->bond(a, b));
        if (i + m > w.size()) continue;
        bool run = true;
        for (std::size_t k = 0; k < m && run; ++k)
          run = w[i + k].gen == ((k % 2) ? b : a) && w[i + k].sign == w[i].sign;
        if (run) spots.push_back(i);
      }
      if (!spots.empty()) {
        std::uniform_int_distribution<std::size_t> d(0, spots.size() - 1);
        std::size_t start = spots[d(rng)];
        int a = w[start].gen, b = w[start + 1].gen;
        std::size_t m = static_cast<std::size_t>(sys->bond(a, b));
        for (std::size_t k = 0; k < m; ++k) w[start + k].gen = (k % 2) ? a : b;
      }
    }
  }
  return w;
}

inline std::string pair_str(const SystemPtr& sys, std::uint32_t x, std::uint32_t y) {
  return "x=[" + WeylElement(sys, x).word_str() + "] y=[" + WeylElement(sys, y).word_str() + "]";
}

inline ReportEntry entry(const std::string& system, const std::string& parabolic, Suite suite,
                         const std::string& check, const std::string& case_label,
                         const CheckOutcome& oc, const std::string& fail_sep = "; ") {
  ReportEntry e;
  e.system = system;
  e.parabolic = parabolic;
  e.suite = suite_name(suite);
  e.check = check;
  e.case_label = case_label;
  e.status = oc.pass ? "pass" : "fail";
  if (!oc.pass) {
    std::string d;
    for (std::size_t i = 0; i < oc.failures.size(); ++i) {
      if (i) d += fail_sep;
      d += oc.failures[i];
    }
    e.detail = d;
  } else {
    e.detail = oc.info;
  }
  return e;
}

// ---------------------------------------------------------------------------

inline std::vector<ReportEntry> run_combinatorics(const std::string& label,
                                                  const SystemPtr& sys,
                                                  const std::vector<GenMask>& subsets) {
  std::vector<ReportEntry> out;
  const std::size_t N = sys->group_order();
  const std::uint32_t w0 = sys->id_w0();

  {  // u -> w0 u reverses the Bruhat order, all pairs
    CheckOutcome oc;
    for (std::uint32_t x = 0; x < N; ++x)
      for (std::uint32_t y = 0; y < N; ++y) {
        bool lhs = sys->id_bruhat_leq(x, y);
        bool rhs = sys->id_bruhat_leq(sys->id_product(w0, y), sys->id_product(w0, x));
        if (lhs != rhs) {
          oc.fail(pair_str(sys, x, y));
          if (oc.failures.size() > 20) break;
        }
      }
    oc.info = std::to_string(N * N) + " pairs";
    out.push_back(entry(label, "-", Suite::combinatorics, "w0_reverses_bruhat", "all pairs", oc));
  }

  {  // probe: does y > x force l(x^-1 y) = l(y) - l(x)? findings only
    CheckOutcome oc;
    std::vector<std::string> findings;
    for (std::uint32_t y = 0; y < N; ++y)
      for (std::uint32_t x = 0; x < N; ++x) {
        if (x == y || !sys->id_bruhat_leq(x, y)) continue;
        int got = sys->id_length(sys->id_product(sys->id_inverse(x), y));
        int expected = sys->id_length(y) - sys->id_length(x);
        if (got != expected)
          findings.push_back(pair_str(sys, x, y) + " l(x^-1 y)=" + std::to_string(got) +
                             " l(y)-l(x)=" + std::to_string(expected));
      }
    ReportEntry e;
    e.system = label;
    e.parabolic = "-";
    e.suite = suite_name(Suite::combinatorics);
    e.check = "bruhat_length_probe";
    e.case_label = "findings";
    e.status = findings.empty() ? "pass" : "findings";
    if (findings.empty()) {
      e.detail = "no counterexamples: Bruhat order below forces length-additive factorization";
    } else {
      e.detail = std::to_string(findings.size()) + " counterexamples: ";
      for (std::size_t i = 0; i < findings.size(); ++i) {
        if (i) e.detail += "; ";
        e.detail += findings[i];
      }
    }
    out.push_back(std::move(e));
  }

  for (GenMask I : subsets) {
    ParabolicSubset P(sys, I);
    const std::string plabel = mask_str(I);

    {
      CheckOutcome oc;
      if (!is_downward_closed(sys, P.elements())) oc.fail("W_L is not downward closed");
      oc.info = std::to_string(P.element_ids().size()) + " elements";
      out.push_back(
          entry(label, plabel, Suite::combinatorics, "parabolic_downward_closed", "", oc));
    }
    {
      CheckOutcome oc;
      auto tau = tau_set(sys, I);
      if (tau.size() != N - P.element_ids().size())
        oc.fail("|tau| = " + std::to_string(tau.size()) + ", expected " +
                std::to_string(N - P.element_ids().size()));
      if (!is_downward_closed(sys, tau)) oc.fail("tau is not downward closed");
      oc.info = std::to_string(tau.size()) + " elements";
      out.push_back(entry(label, plabel, Suite::combinatorics, "tau_downward_closed", "", oc));
    }
    {
      CheckOutcome oc;
      int lw0 = sys->id_length(w0);
      int lu = P.u().length();
      int lwl = P.longest().length();
      if (lw0 != lu + lwl)
        oc.fail("l(w0)=" + std::to_string(lw0) + " != l(u)+l(w0L)=" + std::to_string(lu) + "+" +
                std::to_string(lwl));
      oc.info = "l(w0)=" + std::to_string(lw0) + " l(u)=" + std::to_string(lu) +
                " l(w0L)=" + std::to_string(lwl);
      out.push_back(
          entry(label, plabel, Suite::combinatorics, "length_additive_factorization", "", oc));
    }
    {
      CheckOutcome oc;
      std::uint32_t u = P.u().id();
      std::uint32_t uinv = sys->id_inverse(u);
      std::size_t window = 0;
      for (std::uint32_t v = 0; v < N; ++v) {
        if (v == u || !sys->id_bruhat_leq(v, u)) continue;
        ++window;
        std::uint32_t x = sys->id_product(uinv, v);
        if (P.contains_id(x))
          oc.fail("u^-1 v = [" + WeylElement(sys, x).word_str() + "] lies in W_L (v=[" +
                  WeylElement(sys, v).word_str() + "])");
      }
      oc.info = std::to_string(window) + " window elements";
      out.push_back(entry(label, plabel, Suite::combinatorics, "u_window_disjoint", "", oc));
    }
  }
  return out;
}

inline std::vector<ReportEntry> run_braid(const std::string& label, const SystemPtr& sys,
                                          const std::vector<GenMask>& subsets,
                                          std::uint64_t seed, std::size_t pairs) {
  std::vector<ReportEntry> out;
  auto rng = task_rng(seed, label, Suite::braid);
  const int max_len = 16;

  std::vector<std::pair<BraidWord, BraidWord>> word_pairs;
  for (std::size_t i = 0; i < pairs; ++i)
    word_pairs.emplace_back(random_braid_word(rng, sys->rank(), max_len),
                            random_braid_word(rng, sys->rank(), max_len));

  {  // group laws on the normal forms
    CheckOutcome oc;
    for (const auto& [wa, wb] : word_pairs) {
      GarsideNF a = nf_from_word(sys, wa);
      GarsideNF b = nf_from_word(sys, wb);
      BraidWord ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      if (nf_from_word(sys, ab) != nf_multiply(a, b))
        oc.fail("nf(ab) != nf(a)nf(b) for a='" + braid_word_str(wa) + "' b='" +
                braid_word_str(wb) + "'");
      if (!nf_multiply(a, nf_inverse(a)).is_identity() ||
          !nf_multiply(nf_inverse(a), a).is_identity())
        oc.fail("a a^-1 != e for a='" + braid_word_str(wa) + "'");
      if (nf_from_word(sys, word_of(a)) != a)
        oc.fail("normal form does not round-trip for a='" + braid_word_str(wa) + "'");
    }
    oc.info = std::to_string(word_pairs.size()) + " word pairs";
    out.push_back(entry(label, "-", Suite::braid, "nf_group_laws",
                        std::to_string(word_pairs.size()) + " pairs", oc));
  }

  {  // cross-oracle against the Hecke image, on the same pairs
    CheckOutcome oc;
    for (const auto& [wa, wb] : word_pairs) {
      GarsideNF a = nf_from_word(sys, wa);
      BraidWord wa2 = rewrite_equivalent(rng, sys, wa);
      if (nf_from_word(sys, wa2) != a)
        oc.fail("rewritten word not nf-equal: '" + braid_word_str(wa) + "' vs '" +
                braid_word_str(wa2) + "'");
      if (eval_braid(sys, wa) != eval_braid(sys, wa2))
        oc.fail("rewritten word differs in the Hecke algebra: '" + braid_word_str(wa) + "'");
      if (a == nf_from_word(sys, wb) && eval_braid(sys, wa) != eval_braid(sys, wb))
        oc.fail("nf-equal pair with different Hecke classes: '" + braid_word_str(wa) +
                "' vs '" + braid_word_str(wb) + "'");
    }
    oc.info = std::to_string(word_pairs.size()) + " word pairs";
    out.push_back(entry(label, "-", Suite::braid, "nf_hecke_cross_check",
                        std::to_string(word_pairs.size()) + " pairs", oc));
  }

  {
    CheckOutcome oc;
    if (!check_ft_central(sys)) oc.fail("full twist does not commute with all generators");
    out.push_back(entry(label, "-", Suite::braid, "ft_central", "", oc));
  }

  for (GenMask I : subsets) {
    CheckOutcome oc;
    ConjugationCheck cc = check_conjugation_identity(sys, I);
    if (!cc.conjugation_ok) oc.fail("FT_G != Delta_u FT_L Delta_{u^-1}");
    if (!cc.nabla_ok) oc.fail("FT_L != FT_G nabla_{u^-1} nabla_u");
    out.push_back(entry(label, mask_str(I), Suite::braid, "ft_conjugation", "", oc));
  }
  return out;
}

inline std::vector<ReportEntry> run_hecke(const std::string& label, const SystemPtr& sys) {
  std::vector<ReportEntry> out;
  const std::size_t N = sys->group_order();
  const std::uint32_t w0 = sys->id_w0();

  {  // H_w0 * costandard(u) = H_{w0 u} for every u
    CheckOutcome oc;
    for (std::uint32_t u = 0; u < N; ++u) {
      HeckeElt got = mul_basis_left(w0, costandard(WeylElement(sys, u)));
      if (got != HeckeElt::basis(WeylElement(sys, sys->id_product(w0, u))))
        oc.fail("u=[" + WeylElement(sys, u).word_str() + "]: got " + hecke_str(got));
    }
    oc.info = std::to_string(N) + " elements";
    out.push_back(entry(label, "-", Suite::hecke, "w0_times_costandard", "all elements", oc));
  }

  {  // unitriangularity in both directions
    CheckOutcome oc;
    for (std::uint32_t w = 0; w < N; ++w) {
      WeylElement we(sys, w);
      HeckeElt nabla = costandard(we);
      if (!nabla.coeff_id(w).is_one())
        oc.fail("costandard([" + we.word_str() + "]) has leading coefficient != 1");
      for (const auto& [x, p] : nabla.terms())
        if (!sys->id_bruhat_leq(x, w))
          oc.fail("costandard([" + we.word_str() + "]) has support above [" +
                  WeylElement(sys, x).word_str() + "]");
      CostandardExpansion e = expand_costandard(HeckeElt::basis(we));
      auto it = e.coeff.find(w);
      if (it == e.coeff.end() || !it->second.is_one())
        oc.fail("expansion of H_[" + we.word_str() + "] has leading coefficient != 1");
      for (const auto& [x, p] : e.coeff)
        if (!sys->id_bruhat_leq(x, w))
          oc.fail("expansion of H_[" + we.word_str() + "] has support above [" +
                  WeylElement(sys, x).word_str() + "]");
    }
    oc.info = std::to_string(N) + " elements";
    out.push_back(entry(label, "-", Suite::hecke, "costandard_unitriangular", "all elements", oc));
  }

  {  // braid relations in every rank-2 subsystem
    CheckOutcome oc;
    std::size_t checked = 0;
    for (int i = 0; i < sys->rank(); ++i)
      for (int j = i + 1; j < sys->rank(); ++j) {
        int m = sys->bond(i, j);
        BraidWord lhs, rhs;
        for (int k = 0; k < m; ++k) {
          lhs.push_back({(k % 2) ? j : i, +1});
          rhs.push_back({(k % 2) ? i : j, +1});
        }
        ++checked;
        if (eval_braid(sys, lhs) != eval_braid(sys, rhs))
          oc.fail("braid relation fails for generators " + std::to_string(i + 1) + "," +
                  std::to_string(j + 1));
      }
    oc.info = std::to_string(checked) + " generator pairs";
    out.push_back(entry(label, "-", Suite::hecke, "rank2_braid_relations", "", oc));
  }
  return out;
}

inline HeckeElt random_hecke_elt(std::mt19937_64& rng, const SystemPtr& sys) {
  std::uniform_int_distribution<std::uint32_t> id_d(0,
                                                    static_cast<std::uint32_t>(sys->group_order() - 1));
  std::uniform_int_distribution<int> support_d(1, 4);
  std::uniform_int_distribution<int> nmono_d(1, 3);
  std::uniform_int_distribution<int> exp_d(-3, 3);
  std::uniform_int_distribution<int> coeff_d(-9, 9);
  HeckeElt h(sys);
  int support = support_d(rng);
  for (int i = 0; i < support; ++i) {
    LaurentPoly p;
    int nm = nmono_d(rng);
    for (int k = 0; k < nm; ++k) {
      int c = coeff_d(rng);
      if (c == 0) c = 1;
      p += LaurentPoly::monomial(c, exp_d(rng));
    }
    h.add_term(id_d(rng), p);
  }
  return h;
}

inline std::vector<ReportEntry> run_serre(const std::string& label, const SystemPtr& sys,
                                          const std::vector<GenMask>& subsets,
                                          std::uint64_t seed, std::size_t random_elements) {
  std::vector<ReportEntry> out;
  auto rng = task_rng(seed, label, Suite::serre);
  // hook Levi scenario: type A_{n-1} (n <= 5) with I a prefix {s1..s_{r-1}}
  const bool is_small_type_a =
      label.size() == 2 && label[0] == 'A' && label[1] >= '1' && label[1] <= '4';

  for (GenMask I : subsets) {
    ParabolicContext ctx(sys, I);
    const std::string plabel = ctx.label();

    CheckOutcome duality = ctx.serre_duality();
    out.push_back(entry(label, plabel, Suite::serre, "serre_duality", "all basis elements",
                        duality));
    if (is_small_type_a && (I & (I + 1)) == 0) {
      int r = std::popcount(I) + 1;
      int n = sys->rank() + 1;
      ReportEntry e = entry(label, plabel, Suite::serre, "hook_levi_scenario",
                            "n=" + std::to_string(n) + " r=" + std::to_string(r), duality);
      if (duality.pass)
        e.detail = "Levi of shape (r,1,...,1); " + duality.info;
      out.push_back(std::move(e));
    }

    {
      CheckOutcome oc;
      for (std::size_t i = 0; i < random_elements; ++i) {
        HeckeElt h = random_hecke_elt(rng, sys);
        if (!ctx.serre_duality_on(h))
          oc.fail("random element #" + std::to_string(i) + ": " + hecke_str(h));
      }
      oc.info = std::to_string(random_elements) + " random elements";
      out.push_back(entry(label, plabel, Suite::serre, "serre_duality_random",
                          std::to_string(random_elements) + " elements", oc));
    }

    out.push_back(
        entry(label, plabel, Suite::serre, "twist_kernel_swap", "", ctx.twist_kernel_swap()));

    {
      CheckOutcome oc;
      if (!ctx.twist_restriction()) oc.fail("proj_std(ft_G) != full twist class of H_L");
      out.push_back(entry(label, plabel, Suite::serre, "twist_restriction", "", oc));
    }

    out.push_back(
        entry(label, plabel, Suite::serre, "cone_containment", "", ctx.cone_containment()));

    {
      CheckOutcome oc;
      for (std::size_t i = 0; i < random_elements; ++i) {
        HeckeElt h = random_hecke_elt(rng, sys);
        if (!ctx.recollement_on(h))
          oc.fail("random element #" + std::to_string(i) + ": " + hecke_str(h));
      }
      oc.info = std::to_string(random_elements) + " random elements";
      out.push_back(entry(label, plabel, Suite::serre, "recollement_random",
                          std::to_string(random_elements) + " elements", oc));
    }
  }
  return out;
}

}  // namespace detail

struct RunResult {
  Report report;
  std::size_t failures = 0;
  std::size_t expected_entries = 0;
};

inline RunResult run_suites(const SuiteConfig& config) {
  std::vector<std::string> roster =
      config.systems.empty() ? default_roster(config.with_f4) : config.systems;
  std::vector<Suite> suites =
      config.suites.empty()
          ? std::vector<Suite>{Suite::combinatorics, Suite::braid, Suite::hecke, Suite::serre}
          : config.suites;

  CoxeterSystem::Options opt;
  opt.max_group_order = config.max_group_order;

  struct Task {
    std::string label;
    SystemPtr sys;
    std::vector<GenMask> subsets;
    Suite suite;
  };
  std::vector<Task> tasks;
  std::size_t expected = 0;
  for (const auto& name : roster) {
    SystemPtr sys = resolve_system(name, opt);
    sys->group_order();  // materialize early so the cap fires before any task
    std::vector<GenMask> subsets = parse_parabolics(config.parabolics, sys->rank());
    for (Suite suite : suites) {
      tasks.push_back({name, sys, subsets, suite});
      switch (suite) {
        case Suite::combinatorics: expected += 2 + 4 * subsets.size(); break;
        case Suite::braid: expected += 3 + subsets.size(); break;
        case Suite::hecke: expected += 3; break;
        case Suite::serre: {
          expected += 6 * subsets.size();
          const bool is_small_type_a = name.size() == 2 && name[0] == 'A' && name[1] >= '1' &&
                                       name[1] <= '4';
          if (is_small_type_a)
            for (GenMask I : subsets)
              if ((I & (I + 1)) == 0) ++expected;
          break;
        }
      }
    }
  }

  std::vector<std::vector<ReportEntry>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      const Task& t = tasks[i];
      try {
        switch (t.suite) {
          case Suite::combinatorics:
            results[i] = detail::run_combinatorics(t.label, t.sys, t.subsets);
            break;
          case Suite::braid:
            results[i] = detail::run_braid(t.label, t.sys, t.subsets, config.seed,
                                           config.random_words);
            break;
          case Suite::hecke:
            results[i] = detail::run_hecke(t.label, t.sys);
            break;
          case Suite::serre:
            results[i] = detail::run_serre(t.label, t.sys, t.subsets, config.seed,
                                           config.random_elements);
            break;
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  RunResult out;
  out.report.seed = config.seed;
  out.report.roster = roster;
  for (auto& entries : results)
    for (auto& e : entries) out.report.entries.push_back(std::move(e));
  out.failures = out.report.failure_count();
  out.expected_entries = expected;
  if (out.report.entries.size() != expected)
    throw Error("internal: report entry count " + std::to_string(out.report.entries.size()) +
                " does not match the expected case count " + std::to_string(expected));
  return out;
}

}  // namespace heckelab
