#pragma once

#include <gmpxx.h>

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fibtype/abelian.hpp"
#include "fibtype/coset.hpp"
#include "fibtype/embedding.hpp"
#include "fibtype/face_pairing.hpp"
#include "fibtype/obstructions.hpp"
#include "fibtype/presentation.hpp"
#include "fibtype/spine.hpp"
#include "fibtype/whitehead.hpp"

namespace fibtype {

/// One step of the decision trail: a fixed rule identifier plus a short
/// explanation of what the rule concluded for these parameters.
struct Justification {
  std::string rule;
  std::string note;
};

/// Combined decision for one parameter triple: whether the group is the
/// fundamental group of a 3-manifold and whether the presentation is the
/// spine of a 3-manifold. Structure strings come from a closed vocabulary:
/// trivial, cyclic(s), sieradski(n), fibonacci(n), free-product(...).
struct Verdict {
  enum class Answer { Yes, No, Unknown };

  FibTypeParams params;
  std::vector<std::string> normal_form;  // reduction trace, one step per line

  Answer group_answer = Answer::No;
  std::string group_structure;  // populated only when group_answer is Yes
  mpz_class known_order = 0;    // finite order implied by the structure; 0 if none

  Answer spine_answer = Answer::No;
  std::string spine_family;  // populated only when spine_answer is Yes

  std::vector<Verdict> factors;  // free factors after a gcd split
  std::vector<Justification> justification;
};

inline std::string to_string(Verdict::Answer a) {
  switch (a) {
    case Verdict::Answer::Yes: return "yes";
    case Verdict::Answer::No: return "no";
    default: return "unknown";
  }
}

namespace detail {

inline void add_rule(Verdict& v, const std::string& rule, const std::string& note) {
  v.justification.push_back({rule, note});
}

/// Decides the H(n, m') cases (group and spine together).
inline void classify_h_form(Verdict& v, int n, int mp) {
  using A = Verdict::Answer;
  const int h = n / 2;

  // group status
  if (n == 9 && (mp == 4 || mp == 7)) {
    v.group_answer = A::Unknown;
    add_rule(v, "hform-94-97-unknown",
             "whether H(9,4) and H(9,7) are 3-manifold groups is open");
  } else if (mp == 0) {
    v.group_answer = A::Yes;
    v.known_order = (mpz_class(1) << n) - 1;
    v.group_structure = "cyclic(" + v.known_order.get_str() + ")";
    add_rule(v, "hform-m0-cyclic",
             "H(n,0) is cyclic of order 2^n - 1, a 3-manifold group");
  } else if (mp == 1) {
    v.group_answer = A::Yes;
    v.group_structure = "trivial";
    v.known_order = 1;
    add_rule(v, "hform-m1-trivial", "H(n,1) is the trivial group");
  } else if (n == 3 && mp == 2) {
    v.group_answer = A::Yes;
    v.group_structure = "fibonacci(3)";
    v.known_order = 8;
    add_rule(v, "hform-fibonacci",
             "H(3,2) is F(2,3), a nonabelian 3-manifold group of order 8");
  } else if (mp == 2) {
    v.group_answer = A::Yes;
    v.group_structure = "sieradski(" + std::to_string(n) + ")";
    add_rule(v, "hform-m2-sieradski",
             "H(n,2) is the Sieradski group S(2,n), a 3-manifold group");
  } else if ((n == 5 && mp == 3) || (n == 7 && mp == 4) ||
             (mp == n - 1 && (n == 5 || n == 7))) {
    v.group_answer = A::Yes;
    v.known_order = n == 5 ? 11 : 29;
    v.group_structure = "cyclic(" + v.known_order.get_str() + ")";
    add_rule(v, "hform-f2odd-cyclic",
             "this H(n,m) is F(2," + std::to_string(n) + "), cyclic of order " +
                 v.known_order.get_str());
  } else if (n % 2 == 0 && n >= 4 && mp == h + 1) {
    v.group_answer = A::Yes;
    v.known_order = (mpz_class(1) << h) + 1;
    v.group_structure = "cyclic(" + v.known_order.get_str() + ")";
    add_rule(v, "hform-2t2-cyclic",
             "H(2t-2,t) is cyclic of order 2^(t-1) + 1, a 3-manifold group");
  } else if (mp == n - 1 && n % 2 == 0 && n >= 4) {
    v.group_answer = A::Yes;
    v.group_structure = "fibonacci(" + std::to_string(n) + ")";
    add_rule(v, "hform-fibonacci",
             "H(n,n-1) is the Fibonacci group F(2,n), a 3-manifold group for even n");
  } else if ((mp == n - 1 || 2 * mp - 1 == n) && n % 2 == 1 && n >= 9) {
    v.group_answer = A::No;
    add_rule(v, "hform-f2odd-not",
             "this H(n,m) is F(2,n) with n odd, n >= 9, not a 3-manifold group");
  } else {
    v.group_answer = A::No;
    add_rule(v, "hform-not",
             "(n,m') lies outside the H(n,m) families of 3-manifold groups");
  }

  // spine status
  if (n == 9 && (mp == 4 || mp == 7)) {
    v.spine_answer = A::No;
    add_rule(v, "spine-not-94-97",
             "the presentations H(9,4) and H(9,7) are not 3-manifold spines");
  } else if (mp == 1) {
    v.spine_answer = A::Yes;
    v.spine_family = "s3";
    add_rule(v, "spine-s3", "H(n,1) is a spine of the 3-sphere");
  } else if (n == 3 && mp == 2) {
    v.spine_answer = A::Yes;
    v.spine_family = "fibonacci(3)";
    add_rule(v, "spine-fibonacci", "F(2,3) is a 3-manifold spine");
  } else if (mp == 2) {
    v.spine_answer = A::Yes;
    v.spine_family = "sieradski(" + std::to_string(n) + ")";
    add_rule(v, "spine-sieradski", "the Sieradski presentation is a 3-manifold spine");
  } else if (mp == n - 1 && n % 2 == 0 && n >= 4) {
    v.spine_answer = A::Yes;
    v.spine_family = "fibonacci(" + std::to_string(n) + ")";
    add_rule(v, "spine-fibonacci",
             "the even-index Fibonacci presentation is a 3-manifold spine");
  } else {
    v.spine_answer = A::No;
    add_rule(v, "spine-not-hform",
             "no H(n,m) outside m = 1, m = 2 and the even or n = 3 Fibonacci "
             "cases is a 3-manifold spine");
  }
}

}  // namespace detail

/// Full decision for G_n(m,k): gcd split, then the H(n,m') reduction when one
/// exists, otherwise the sphere-parameter test for the remaining triples.
inline Verdict classify(const FibTypeParams& p_in) {
  using A = Verdict::Answer;
  FibTypeParams p = FibTypeParams::make(p_in.n, p_in.m, p_in.k);
  Verdict v;
  v.params = p;

  GcdReduction g = reduce_gcd(p);
  if (g.d > 1) {
    Verdict f = classify(g.q);
    v.normal_form.push_back("gcd(n,m,k) = " + std::to_string(g.d) +
                            ": free product of " + std::to_string(g.d) +
                            " copies of G_" + std::to_string(g.q.n) + "(" +
                            std::to_string(g.q.m) + "," + std::to_string(g.q.k) + ")");
    detail::add_rule(v, "gcd-split",
                     "the group splits as a free product of identical factors; "
                     "both statuses hold iff they hold for the factor");
    for (int i = 0; i < g.d; ++i) v.factors.push_back(f);
    v.group_answer = f.group_answer;
    v.spine_answer = f.spine_answer;
    if (f.group_answer == A::Yes) {
      if (f.group_structure == "trivial") {
        v.group_structure = "trivial";
        v.known_order = 1;
      } else {
        v.group_structure = "free-product(";
        for (int i = 0; i < g.d; ++i)
          v.group_structure += (i ? ", " : "") + f.group_structure;
        v.group_structure += ")";
        if (f.known_order == 1) v.known_order = 1;
      }
    }
    if (f.spine_answer == A::Yes) {
      v.spine_family = "wedge(";
      for (int i = 0; i < g.d; ++i)
        v.spine_family += (i ? ", " : "") + f.spine_family;
      v.spine_family += ")";
    }
    v.justification.insert(v.justification.end(), f.justification.begin(),
                           f.justification.end());
    return v;
  }

  if (p.n == 1) {
    v.normal_form.push_back("n = 1: the relator freely reduces to x_0");
    v.group_answer = A::Yes;
    v.group_structure = "trivial";
    v.known_order = 1;
    v.spine_answer = A::Yes;
    v.spine_family = "s3";
    detail::add_rule(v, "n1-trivial",
                     "for n = 1 the presentation collapses to <x | x> and is a "
                     "spine of the 3-sphere");
    return v;
  }

  std::optional<HForm> h = to_h_form(p);
  if (h) {
    v.normal_form.push_back("h-form: H(" + std::to_string(h->n) + "," +
                            std::to_string(h->m_prime) + ")");
    detail::add_rule(v, "h-form-reduction",
                     "a verified generator reindexing turns G_n(m,k) into "
                     "G_n(m',1) with m' = " + std::to_string(h->m_prime));
    detail::classify_h_form(v, h->n, h->m_prime);
    return v;
  }

  v.normal_form.push_back("no h-form: gcd(n,k) > 1 and gcd(n,m-k) > 1");
  const int n = p.n;
  bool coprime = std::gcd(p.m, p.k) == 1;
  bool half = (2 * p.k) % n == 0 || (2 * ((p.m - p.k) % n + n)) % n == 0;
  if (coprime && half) {
    // n is even here since 2k or 2(m-k) vanishes mod n with k, m-k nonzero
    mpz_class s = (mpz_class(1) << (n / 2)) - (((p.m + n / 2) % 2 == 0) ? 1 : -1);
    v.group_answer = A::Yes;
    v.known_order = s;
    v.group_structure = "cyclic(" + s.get_str() + ")";
    detail::add_rule(v, "thmA-cyclic",
                     "with gcd(m,k) = 1 and a doubled parameter vanishing mod n "
                     "the group is cyclic of order 2^(n/2) - (-1)^(m+n/2)");
  } else {
    v.group_answer = A::No;
    detail::add_rule(v, "thmA-not",
                     "without gcd(m,k) = 1 and a doubled parameter vanishing "
                     "mod n the group is not a 3-manifold group");
  }
  v.spine_answer = A::No;
  detail::add_rule(v, "spine-not-no-hform",
                   "no presentation without an H(n,m') form is a 3-manifold spine");
  return v;
}

inline Verdict classify_group(const FibTypeParams& p) { return classify(p); }
inline Verdict classify_spine(const FibTypeParams& p) { return classify(p); }

/// Independent validation of a verdict: finite orders are re-derived by coset
/// enumeration and abelianization, spine certificates are re-built and spine
/// refusals re-derived from an obstruction where one of the obstruction
/// operations applies. Mismatches are reported, never repaired.
struct CrossCheckReport {
  bool passed = true;
  std::vector<std::string> checks;    // description of each check that ran
  std::vector<std::string> failures;  // empty iff passed
};

inline CrossCheckReport cross_check(const Verdict& v,
                                    const EnumerationLimits& limits = {}) {
  CrossCheckReport rep;
  auto ok = [&](const std::string& s) { rep.checks.push_back(s); };
  auto bad = [&](const std::string& s) {
    rep.failures.push_back(s);
    rep.passed = false;
  };
  const FibTypeParams& p = v.params;
  CyclicPresentation pres = make_fib_presentation(p);

  if (v.group_answer == Verdict::Answer::Yes && v.known_order > 0 &&
      v.factors.empty()) {
    CosetTable t = enumerate(pres, {}, limits);
    if (t.status != EnumerationStatus::Complete)
      bad("enumeration did not complete within limits");
    else if (t.index() != v.known_order)
      bad("enumerated order " + std::to_string(t.index()) +
          " does not match claimed " + v.known_order.get_str());
    else
      ok("coset enumeration confirms order " + v.known_order.get_str());

    AbelianInvariants inv = abelianization(pres);
    bool cyclic_claim = v.group_structure.rfind("cyclic(", 0) == 0 ||
                        v.group_structure == "trivial";
    if (cyclic_claim) {
      if (!inv.is_finite() || inv.order() != v.known_order)
        bad("abelianization order does not match the cyclic claim");
      else if (inv.torsion.size() > 1)
        bad("abelianization is not cyclic");
      else
        ok("abelianization is cyclic of the claimed order");
    }
  }

  if (v.spine_answer == Verdict::Answer::Yes && v.factors.empty()) {
    std::optional<HForm> h = p.n == 1 ? std::nullopt : to_h_form(p);
    if (h && h->m_prime == 1 && h->n >= 2) {
      FacePairingComplex c = build_h_n1_polyhedron(h->n);
      SpineCheck chk = verify_face_pairing(c);
      CyclicPresentation hp =
          make_fib_presentation(FibTypeParams::make(h->n, 1, 1));
      if (!chk.valid || !matches_presentation(c, hp.relators()))
        bad("face pairing certificate for H(n,1) failed");
      else
        ok("face pairing certificate verified for H(" + std::to_string(h->n) + ",1)");
    } else if (h && h->n % 2 == 0 && h->n / 2 >= 3 &&
               (h->m_prime == 2 || h->m_prime == h->n - 1)) {
      int m = h->n / 2;
      FacePairingComplex c = h->m_prime == 2 ? build_alt_sieradski_polyhedron(m)
                                             : build_alt_fibonacci_polyhedron(m);
      CyclicPresentation ap = h->m_prime == 2 ? alt_sieradski_presentation(m)
                                              : alt_fibonacci_presentation(m);
      SpineCheck chk = verify_face_pairing(c);
      if (!chk.valid || !matches_presentation(c, ap.relators()))
        bad("face pairing certificate for the halved presentation failed");
      else
        ok("face pairing certificate verified for the halved presentation");
    } else {
      ok("no polyhedron builder for this spine family; skipped");
    }
  }

  if (v.spine_answer == Verdict::Answer::No && v.factors.empty()) {
    AbelianInvariants inv = abelianization(pres);
    bool gate = inv.is_finite() && inv.order() % 2 != 0;
    std::optional<HForm> h = p.n == 1 ? std::nullopt : to_h_form(p);
    const int n = p.n;
    bool sphere_shape = n % 2 == 0 && p.k != 0 && p.m != p.k &&
                        std::gcd(p.m, p.k) == 1 &&
                        ((2 * p.k) % n == 0 ||
                         (2 * ((p.m - p.k) % n + n)) % n == 0);
    if (!gate) {
      ok("abelianization gate not met; no obstruction expected");
    } else if (sphere_shape) {
      FibTypeParams q =
          (2 * p.k) % n == 0 ? p : FibTypeParams::make(n, p.m, n / 2);
      int d = std::gcd((q.m + n / 2) % n, n);
      try {
        if (d == 2) {
          sphere_assembly_obstruction(q);
          ok("sphere assembly obstruction verified");
        } else if (d == 1 && n >= 6) {
          nonplanar_branch_obstruction(q);
          ok("non-planar branch obstruction verified");
        } else {
          ok("obstruction operations do not cover this shape; skipped");
        }
      } catch (const std::exception& ex) {
        bad(std::string("obstruction check failed: ") + ex.what());
      }
    } else if (h && h->m_prime == 0 && h->n >= 3) {
      CyclicPresentation hp =
          make_fib_presentation(FibTypeParams::make(h->n, 0, 1));
      LabeledMultigraph g = whitehead_graph(hp);
      EmbeddingCensus c = enumerate_spherical_embeddings(g);
      bool all = !c.embeddings.empty();
      for (const auto& e : c.embeddings)
        all = all && corner_multiplicity_obstruction(g, e, hp).has_value();
      if (all)
        ok("corner multiplicity obstruction fires in every embedding");
      else
        bad("expected a corner multiplicity obstruction for H(n,0)");
    } else {
      ok("no obstruction operation applies to this refusal; skipped");
    }
  }
  return rep;
}

}  // namespace fibtype
