#pragma once

/**
 * @file harness.hpp
 * @brief Instance checks of the graded-primality theorems over concrete
 *        structures, products and homomorphisms.
 *
 * Each theorem id maps to one check. A check runs over one subject and ends
 * in one of four states:
 *
 *   pass            every instance satisfied the claim
 *   fail            some instance violated it (an unexpected result)
 *   expected-fail   a counterexample the theory predicts was found
 *   not-applicable  the hypotheses are unmet; the summary says which
 *
 * Every fail or expected-fail carries findings with the index lists needed
 * to replay the verdict through the primality module.
 */

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "gnr/constructions.hpp"
#include "gnr/corpus.hpp"
#include "gnr/lattice.hpp"
#include "gnr/primality.hpp"

namespace gnr {

enum class CheckStatus { pass, fail, expected_fail, not_applicable };

inline std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::expected_fail: return "expected-fail";
        case CheckStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

/// Named index lists. Sets are element lists; grades and verdicts are singletons.
struct Finding {
    std::string label;
    std::vector<std::pair<std::string, std::vector<unsigned>>> fields;

    const std::vector<unsigned>* field(std::string_view key) const {
        for (const auto& [k, v] : fields)
            if (k == key) return &v;
        return nullptr;
    }
};

struct TheoremCheck {
    std::string id;
    std::string subject;
    CheckStatus status = CheckStatus::not_applicable;
    std::string summary;
    unsigned instances = 0;
    std::vector<Finding> findings;
};

struct HarnessOptions {
    unsigned threads = 1;
    IdealScope ideal_scope = IdealScope::all;
    /// Longest product of graded primes searched when factoring ideals.
    unsigned factor_bound = 4;
};

struct HarnessReport {
    IdealScope ideal_scope = IdealScope::all;
    unsigned factor_bound = 4;
    std::vector<TheoremCheck> checks;

    bool has_unexpected() const {
        return std::any_of(checks.begin(), checks.end(),
                           [](const TheoremCheck& c) { return c.status == CheckStatus::fail; });
    }
    std::map<std::string, unsigned> totals() const {
        std::map<std::string, unsigned> t;
        for (CheckStatus s :
             {CheckStatus::pass, CheckStatus::fail, CheckStatus::expected_fail, CheckStatus::not_applicable})
            t[std::string(to_string(s))] = 0;
        for (const auto& c : checks) ++t[std::string(to_string(c.status))];
        return t;
    }
};

// ---------------------------------------------------------------------------
// Subjects

/// N/Q for one proper graded Q, or the reason it could not be built.
struct QuotientEntry {
    SubsetMask modulus;
    std::shared_ptr<const QuotientStructure> structure;
    std::string error;
};

struct StructureSubject {
    std::string name;
    std::shared_ptr<const IdealLattice> lattice;
    /// Graded primes under the harness scope, canonical order.
    std::vector<SubsetMask> primes;
    std::vector<QuotientEntry> quotients;
    /// Set for componentwise-graded direct products.
    std::shared_ptr<const StructureSubject> left, right;

    const GradedNearRing& structure() const { return lattice->structure(); }
};

struct HomSubject {
    std::string name;
    std::shared_ptr<const StructureSubject> source, target;
    NearRingHom hom;
};

inline std::shared_ptr<const StructureSubject> make_subject(
    std::string name, GradedNearRing gn, const HarnessOptions& opt,
    std::shared_ptr<const StructureSubject> left = nullptr, std::shared_ptr<const StructureSubject> right = nullptr) {
    auto s = std::make_shared<StructureSubject>();
    s->name = std::move(name);
    s->lattice = std::make_shared<const IdealLattice>(std::move(gn));
    s->primes = graded_primes(*s->lattice, opt.ideal_scope);
    for (SubsetMask q : s->lattice->proper_graded_ideals()) {
        QuotientEntry e{q, nullptr, {}};
        try {
            e.structure = std::make_shared<const QuotientStructure>(quotient(s->lattice->structure(), q));
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::EnumerationBudgetExceeded) throw;
            e.error = err.what();
        }
        s->quotients.push_back(std::move(e));
    }
    s->left = std::move(left);
    s->right = std::move(right);
    return s;
}

/// Everything run_all iterates over, in canonical order.
struct SubjectSet {
    std::vector<std::shared_ptr<const StructureSubject>> structures;
    std::vector<HomSubject> homs;
};

/// Subjects for the built-in corpus, or for the named entries only (plus the
/// homomorphisms touching them).
inline SubjectSet corpus_subjects(const HarnessOptions& opt, const std::vector<std::string>& only = {}) {
    auto wanted = [&](const std::string& n) {
        return only.empty() || std::find(only.begin(), only.end(), n) != only.end();
    };
    std::map<std::string, std::shared_ptr<const StructureSubject>> built;
    std::function<std::shared_ptr<const StructureSubject>(const CorpusEntry&)> get = [&](const CorpusEntry& e) {
        if (auto it = built.find(e.name); it != built.end()) return it->second;
        std::shared_ptr<const StructureSubject> l, r;
        if (e.factors) {
            l = get(*find_corpus_entry(e.factors->first));
            r = get(*find_corpus_entry(e.factors->second));
        }
        auto s = make_subject(e.name, e.structure, opt, l, r);
        built.emplace(e.name, s);
        return s;
    };
    SubjectSet out;
    for (const auto& e : corpus())
        if (wanted(e.name)) out.structures.push_back(get(e));
    for (const auto& h : corpus_homs()) {
        if (!wanted(h.source) && !wanted(h.target)) continue;
        auto src = get(*find_corpus_entry(h.source));
        auto tgt = get(*find_corpus_entry(h.target));
        out.homs.push_back(HomSubject{h.name, src, tgt, validate_hom(src->structure().ring(), tgt->structure().ring(), h.map)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog

struct TheoremInfo {
    std::string_view id;
    std::string_view description;
    bool on_structure = false;
    bool on_product = false;
    bool on_hom = false;
};

inline const std::vector<TheoremInfo>& theorem_catalog() {
    static const std::vector<TheoremInfo> catalog{
        {"2.3", "with unity, a graded ideal that is maximal is graded prime", true, false, false},
        {"2.4", "the intersection of a chain of graded primes is graded prime", true, false, false},
        {"2.4-cex", "two incomparable graded primes whose intersection is not graded prime", true, false, false},
        {"2.5", "for P an intersection of graded primes: (J_g)^n in P_(g^n) forces J_g in P_g", true, false, false},
        {"2.6", "for P an intersection of graded primes: J^n in P forces J in P", true, false, false},
        {"2.6-note", "a graded ideal that is prime is graded prime", true, false, false},
        {"2.7-analog", "a graded prime ideal that is not prime", true, false, false},
        {"2.8", "definition, homogeneous-element and both ideal-comparison criteria agree", true, false, false},
        {"2.9", "both element/colon criteria agree with the definition", true, false, false},
        {"2.10", "preimages and images of graded primes under component-respecting surjections", true, false, true},
        {"2.11", "ideal correspondence for the canonical projection onto N/Q", true, false, false},
        {"2.12", "for graded Q in P: P graded prime iff pi(P) graded prime in N/Q", true, false, false},
        {"2.13", "the nonzero-product criterion in N/P agrees with the definition", true, false, false},
        {"2.14", "I graded prime iff {0} graded prime in N/I", true, false, false},
        {"2.15", "a graded maximal ideal I is graded prime or contains N^2", true, false, false},
        {"2.16", "with unity, every graded maximal ideal is graded prime", true, false, false},
        {"2.17", "{0} graded prime in the target forces the kernel graded prime", true, false, true},
        {"2.17-remark", "{0} graded prime in the target while not graded prime in the source", false, false, true},
        {"2.18", "P graded prime in N iff P x M graded prime in N x M", false, true, false},
        {"2.19", "factorization into graded primes passes from the factors to N x M", false, true, false},
        {"2.20", "graded primes of N x M are exactly I x M and N x J with I, J graded prime", false, true, false},
        {"2.21", "{0} x {0} is not graded prime for nontrivial factors", false, true, false},
        {"2.22", "all proper graded ideals of N x M graded prime forces a trivial factor", false, true, false},
    };
    return catalog;
}

inline const TheoremInfo& find_theorem(std::string_view id) {
    if (id == "2.4-counterexample") id = "2.4-cex";
    for (const auto& t : theorem_catalog())
        if (t.id == id) return t;
    throw Error(ErrorKind::UnknownTheoremId, "unknown theorem id '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// Check implementations

namespace detail {

inline std::vector<unsigned> ids(SubsetMask s) { return s.elements(); }

inline void add_witness_fields(Finding& f, const Witness& w) {
    f.fields.emplace_back("A", ids(w.a));
    f.fields.emplace_back("B", ids(w.b));
    f.fields.emplace_back("g", std::vector<unsigned>{w.g});
    f.fields.emplace_back("h", std::vector<unsigned>{w.h});
    if (!w.elements.empty()) f.fields.emplace_back("elements", w.elements);
}

/// Finding for a graded-primality verdict on P (witness fields when false).
inline Finding verdict_finding(std::string label, SubsetMask p, const PrimalityReport& rep) {
    Finding f{std::move(label), {{"P", ids(p)}, {"verdict", {rep.verdict ? 1u : 0u}}}};
    if (rep.witness) add_witness_fields(f, *rep.witness);
    return f;
}

struct Context {
    const HarnessOptions& opt;
    TheoremCheck& out;

    PrimalityReport def(const IdealLattice& lat, SubsetMask p) const {
        return is_graded_prime_def(lat, p, opt.ideal_scope);
    }
    void fail(Finding f) {
        out.status = CheckStatus::fail;
        out.findings.push_back(std::move(f));
    }
    void finish(std::string pass_summary) {
        if (out.status == CheckStatus::fail) {
            out.summary = std::to_string(out.findings.size()) + " violating instance(s) of " +
                          std::to_string(out.instances);
            return;
        }
        out.status = CheckStatus::pass;
        out.summary = std::move(pass_summary);
    }
    void not_applicable(std::string why) {
        out.status = CheckStatus::not_applicable;
        out.summary = std::move(why);
    }
};

inline std::vector<SubsetMask> graded_maximal_ideals(const IdealLattice& lat) {
    std::vector<SubsetMask> out;
    for (SubsetMask i : lat.proper_graded_ideals())
        if (is_maximal_ideal(lat, i)) out.push_back(i);
    return out;
}

/// Intersections of all nonempty families of graded primes.
inline std::vector<SubsetMask> prime_intersections(const std::vector<SubsetMask>& primes) {
    std::vector<SubsetMask> out = primes;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (SubsetMask p : primes) {
            SubsetMask x = out[k] & p;
            if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
        }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

inline void check_maximal(Context& cx, const StructureSubject& s, bool require_unity, bool allow_square) {
    const IdealLattice& lat = *s.lattice;
    if (require_unity && !lat.ring().one()) return cx.not_applicable("no multiplicative identity");
    const auto maximal = graded_maximal_ideals(lat);
    if (maximal.empty()) return cx.not_applicable("no graded maximal ideal");
    const SubsetMask square = set_power(lat.ring(), lat.ring().all(), 2);
    unsigned prime = 0, by_square = 0;
    for (SubsetMask i : maximal) {
        ++cx.out.instances;
        auto rep = cx.def(lat, i);
        if (rep.verdict) {
            ++prime;
        } else if (allow_square && square.subset_of(i)) {
            ++by_square;
        } else {
            Finding f = verdict_finding("graded maximal ideal is not graded prime", i, rep);
            if (allow_square) f.fields.emplace_back("N^2", ids(square));
            cx.fail(std::move(f));
        }
    }
    std::string msg = std::to_string(prime) + " of " + std::to_string(maximal.size()) +
                      " graded maximal ideal(s) graded prime";
    if (allow_square) msg += ", " + std::to_string(by_square) + " contain N^2";
    cx.finish(msg);
}

inline void check_chains(Context& cx, const StructureSubject& s) {
    const IdealLattice& lat = *s.lattice;
    const auto& gp = s.primes;
    if (gp.empty()) return cx.not_applicable("no graded prime ideals");
    // Chains are strictly increasing sequences in canonical order; extend depth first.
    std::vector<SubsetMask> chain;
    std::function<void(std::size_t)> walk = [&](std::size_t from) {
        for (std::size_t j = from; j < gp.size(); ++j) {
            if (!chain.empty() && !chain.back().proper_subset_of(gp[j])) continue;
            chain.push_back(gp[j]);
            SubsetMask meet = lat.ring().all();
            for (SubsetMask c : chain) meet &= c;
            ++cx.out.instances;
            auto rep = lat.is_graded(meet) && lat.is_proper(meet) ? cx.def(lat, meet) : PrimalityReport{false, {}, "def"};
            if (!rep.verdict) {
                Finding f = verdict_finding("chain intersection is not graded prime", meet, rep);
                for (std::size_t k = 0; k < chain.size(); ++k) f.fields.emplace_back("P" + std::to_string(k + 1), ids(chain[k]));
                cx.fail(std::move(f));
            }
            walk(j + 1);
            chain.pop_back();
        }
    };
    walk(0);
    cx.finish(std::to_string(cx.out.instances) + " chain(s) of graded primes, all intersections graded prime");
}

inline void check_chain_counterexample(Context& cx, const StructureSubject& s) {
    const IdealLattice& lat = *s.lattice;
    const auto& gp = s.primes;
    for (std::size_t i = 0; i < gp.size(); ++i)
        for (std::size_t j = i + 1; j < gp.size(); ++j) {
            if (gp[i].subset_of(gp[j]) || gp[j].subset_of(gp[i])) continue;
            ++cx.out.instances;
            const SubsetMask meet = gp[i] & gp[j];
            auto rep = cx.def(lat, meet);
            if (rep.verdict) continue;
            Finding f = verdict_finding("intersection of incomparable graded primes", meet, rep);
            f.fields.emplace_back("P1", ids(gp[i]));
            f.fields.emplace_back("P2", ids(gp[j]));
            cx.out.findings.push_back(std::move(f));
            cx.out.status = CheckStatus::expected_fail;
            cx.out.summary = gp[i].to_string() + " and " + gp[j].to_string() + " are graded prime; " +
                             meet.to_string() + " is not";
            return;
        }
    cx.not_applicable(cx.out.instances == 0 ? "no incomparable pair of graded primes"
                                            : "every incomparable pair has a graded prime intersection");
}

inline void check_power_descent(Context& cx, const StructureSubject& s, bool componentwise) {
    const IdealLattice& lat = *s.lattice;
    if (s.primes.empty()) return cx.not_applicable("no graded prime ideals");
    const unsigned n_max = lat.ring().order();
    for (SubsetMask p : prime_intersections(s.primes))
        for (SubsetMask j : lat.ideals(cx.opt.ideal_scope))
            for (unsigned n = 1; n <= n_max; ++n) {
                ++cx.out.instances;
                const bool ok = componentwise ? power_descends_componentwise(lat, p, j, n)
                                              : power_descends_globally(lat, p, j, n);
                if (!ok)
                    cx.fail(Finding{"power lies in P but J does not",
                                    {{"P", ids(p)}, {"J", ids(j)}, {"n", {n}}, {"J graded", {lat.is_graded(j) ? 1u : 0u}}}});
            }
    if (cx.out.status == CheckStatus::fail) {
        const bool all_ungraded = std::all_of(cx.out.findings.begin(), cx.out.findings.end(),
                                              [](const Finding& f) { return f.field("J graded")->front() == 0; });
        cx.finish({});
        if (all_ungraded) cx.out.summary += "; every violating J is not graded";
        return;
    }
    cx.finish(std::to_string(cx.out.instances) + " (P, J, n) instance(s) with n up to the order");
}

inline void check_prime_implies_graded_prime(Context& cx, const StructureSubject& s) {
    const IdealLattice& lat = *s.lattice;
    const auto proper = lat.proper_graded_ideals();
    if (proper.empty()) return cx.not_applicable("no proper graded ideals");
    unsigned prime = 0;
    for (SubsetMask p : proper) {
        if (!is_prime_ideal(lat, p).verdict) continue;
        ++prime;
        ++cx.out.instances;
        auto rep = cx.def(lat, p);
        if (!rep.verdict) cx.fail(verdict_finding("prime graded ideal is not graded prime", p, rep));
    }
    if (prime == 0) return cx.not_applicable("no graded ideal is prime");
    cx.finish(std::to_string(prime) + " prime graded ideal(s), all graded prime");
}

inline void check_graded_prime_not_prime(Context& cx, const StructureSubject& s) {
    const IdealLattice& lat = *s.lattice;
    for (SubsetMask p : s.primes) {
        ++cx.out.instances;
        auto prime = is_prime_ideal(lat, p);
        if (prime.verdict) continue;
        Finding f{"graded prime but not prime", {{"P", ids(p)}}};
        add_witness_fields(f, *prime.witness);
        cx.out.findings.push_back(std::move(f));
        cx.out.status = CheckStatus::pass;
        cx.out.summary = p.to_string() + " is graded prime and not prime";
        return;
    }
    cx.not_applicable(s.primes.empty() ? "no graded prime ideals" : "every graded prime ideal is prime");
}

/// Runs each checker against the definition on every proper graded ideal.
inline void check_agreement(Context& cx, const StructureSubject& s, std::vector<Checker> checkers) {
    const IdealLattice& lat = *s.lattice;
    const auto proper = lat.proper_graded_ideals();
    if (proper.empty()) return cx.not_applicable("no proper graded ideals");
    for (SubsetMask p : proper) {
        ++cx.out.instances;
        auto ref = cx.def(lat, p);
        for (Checker c : checkers) {
            PrimalityReport rep;
            if (c == Checker::p213) {
                auto it = std::find_if(s.quotients.begin(), s.quotients.end(),
                                       [&](const QuotientEntry& q) { return q.modulus == p; });
                if (!it->structure) {
                    cx.fail(Finding{"quotient unavailable: " + it->error, {{"P", ids(p)}}});
                    continue;
                }
                rep = quotient_nonzero_product_check(lat, *it->structure, cx.opt.ideal_scope);
            } else {
                rep = run_checker(c, lat, p, cx.opt.ideal_scope);
            }
            if (rep.verdict != ref.verdict || !replay(lat, p, rep)) {
                Finding f = verdict_finding(std::string(checker_name(c)) + " disagrees with def", p, rep);
                f.fields.emplace_back("def", std::vector<unsigned>{ref.verdict ? 1u : 0u});
                cx.fail(std::move(f));
            }
        }
    }
    std::string names;
    for (Checker c : checkers) names += std::string(names.empty() ? "" : ", ") + std::string(checker_name(c));
    cx.finish(names + " agree with def on " + std::to_string(proper.size()) + " proper graded ideal(s)");
}

/**
 * Transfer through a surjective h: N -> M respecting components. Preimages
 * of graded primes of M are graded prime; images of graded primes of N that
 * contain the kernel are graded prime.
 */
inline void hom_transfer(Context& cx, const IdealLattice& src, const std::vector<SubsetMask>& src_primes,
                         const IdealLattice& tgt, const std::vector<SubsetMask>& tgt_primes, const NearRingHom& h,
                         const std::string& tag) {
    for (SubsetMask q : tgt_primes) {
        ++cx.out.instances;
        const SubsetMask pre = h.preimage(q);
        if (!src.is_graded(pre) || !src.is_proper(pre)) {
            cx.fail(Finding{tag + ": preimage is not a proper graded ideal", {{"target P", ids(q)}, {"preimage", ids(pre)}}});
            continue;
        }
        auto rep = cx.def(src, pre);
        if (!rep.verdict) {
            Finding f = verdict_finding(tag + ": preimage of a graded prime is not graded prime", pre, rep);
            f.fields.emplace_back("target P", ids(q));
            cx.fail(std::move(f));
        }
    }
    for (SubsetMask p : src_primes) {
        if (!h.kernel().subset_of(p)) continue;
        ++cx.out.instances;
        const SubsetMask img = h.image(p);
        if (!tgt.is_graded(img) || !tgt.is_proper(img)) {
            cx.fail(Finding{tag + ": image is not a proper graded ideal", {{"source P", ids(p)}, {"image", ids(img)}}});
            continue;
        }
        auto rep = cx.def(tgt, img);
        if (!rep.verdict) {
            Finding f = verdict_finding(tag + ": image of a graded prime is not graded prime", img, rep);
            f.fields.emplace_back("source P", ids(p));
            cx.fail(std::move(f));
        }
    }
}

/// Kernel transfer: {0} graded prime in the target forces ker h graded prime.
inline void kernel_transfer(Context& cx, const IdealLattice& src, const IdealLattice& tgt, const NearRingHom& h,
                            const std::string& tag) {
    if (tgt.ring().order() < 2) return;
    if (!cx.def(tgt, tgt.ring().zero_set()).verdict) return;
    ++cx.out.instances;
    const SubsetMask k = h.kernel();
    if (!src.is_graded(k)) {
        cx.fail(Finding{tag + ": kernel is not graded", {{"kernel", ids(k)}}});
        return;
    }
    auto rep = cx.def(src, k);
    if (!rep.verdict) cx.fail(verdict_finding(tag + ": kernel is not graded prime", k, rep));
}

/// Applies body to every well-formed canonical projection N -> N/Q respecting components.
template <class F>
unsigned for_each_projection(Context& cx, const StructureSubject& s, F&& body) {
    unsigned used = 0;
    for (const auto& q : s.quotients) {
        if (!q.structure) {
            cx.fail(Finding{"quotient unavailable: " + q.error, {{"Q", ids(q.modulus)}}});
            continue;
        }
        const auto& qs = *q.structure;
        if (!hom_respects_components(qs.projection, *s.lattice, qs.quotient.structure())) continue;
        ++used;
        body(qs, "N/" + q.modulus.to_string());
    }
    return used;
}

inline void check_transfer(Context& cx, const StructureSubject& s) {
    const unsigned used = for_each_projection(cx, s, [&](const QuotientStructure& qs, const std::string& tag) {
        hom_transfer(cx, *s.lattice, s.primes, qs.quotient, graded_primes(qs.quotient, cx.opt.ideal_scope),
                     qs.projection, tag);
    });
    if (used == 0 && cx.out.status != CheckStatus::fail)
        return cx.not_applicable("no canonical projection respecting components");
    cx.finish(std::to_string(cx.out.instances) + " transfer instance(s) over " + std::to_string(used) +
              " projection(s)");
}

inline void check_transfer(Context& cx, const HomSubject& h) {
    const IdealLattice& src = *h.source->lattice;
    const IdealLattice& tgt = *h.target->lattice;
    if (!(src.structure().monoid() == tgt.structure().monoid()))
        return cx.not_applicable("source and target are graded by different monoids");
    if (!h.hom.surjective()) return cx.not_applicable("homomorphism is not surjective");
    if (auto v = component_respect_violation(h.hom, src, tgt.structure()))
        return cx.not_applicable("homomorphism does not respect components at ideal " + v->ideal.to_string() +
                                 ", grade " + std::to_string(v->grade));
    hom_transfer(cx, src, h.source->primes, tgt, h.target->primes, h.hom, h.name);
    cx.finish(std::to_string(cx.out.instances) + " transfer instance(s)");
}

inline void check_kernel(Context& cx, const StructureSubject& s) {
    const unsigned used = for_each_projection(cx, s, [&](const QuotientStructure& qs, const std::string& tag) {
        kernel_transfer(cx, *s.lattice, qs.quotient, qs.projection, tag);
    });
    if (used == 0 && cx.out.status != CheckStatus::fail)
        return cx.not_applicable("no canonical projection respecting components");
    if (cx.out.instances == 0 && cx.out.status != CheckStatus::fail)
        return cx.not_applicable("{0} is not graded prime in any quotient");
    cx.finish(std::to_string(cx.out.instances) + " projection(s) with {0} graded prime in N/Q, kernels graded prime");
}

inline void check_kernel(Context& cx, const HomSubject& h) {
    const IdealLattice& src = *h.source->lattice;
    const IdealLattice& tgt = *h.target->lattice;
    if (!(src.structure().monoid() == tgt.structure().monoid()))
        return cx.not_applicable("source and target are graded by different monoids");
    if (!h.hom.surjective()) return cx.not_applicable("homomorphism is not surjective");
    if (!hom_respects_components(h.hom, src, tgt.structure()))
        return cx.not_applicable("homomorphism does not respect components");
    kernel_transfer(cx, src, tgt, h.hom, h.name);
    if (cx.out.instances == 0) return cx.not_applicable("{0} is not graded prime in the target");
    cx.finish("kernel " + h.hom.kernel().to_string() + " is graded prime");
}

inline void check_kernel_converse(Context& cx, const HomSubject& h) {
    const IdealLattice& src = *h.source->lattice;
    const IdealLattice& tgt = *h.target->lattice;
    if (src.ring().order() < 2 || tgt.ring().order() < 2) return cx.not_applicable("a trivial near-ring is involved");
    ++cx.out.instances;
    auto in_tgt = cx.def(tgt, tgt.ring().zero_set());
    auto in_src = cx.def(src, src.ring().zero_set());
    if (in_tgt.verdict && !in_src.verdict) {
        Finding f = verdict_finding("{0} not graded prime in the source", src.ring().zero_set(), in_src);
        f.fields.emplace_back("kernel", ids(h.hom.kernel()));
        cx.out.findings.push_back(std::move(f));
        cx.out.status = CheckStatus::expected_fail;
        cx.out.summary = "{0} is graded prime in " + h.target->name + " but not in " + h.source->name;
        return;
    }
    cx.not_applicable(in_tgt.verdict ? "{0} is graded prime in the source as well"
                                     : "{0} is not graded prime in the target");
}

inline void check_correspondence(Context& cx, const StructureSubject& s) {
    if (s.quotients.empty()) return cx.not_applicable("no proper graded ideals");
    unsigned literal_mismatch = 0;
    for (const auto& q : s.quotients) {
        ++cx.out.instances;
        if (!q.structure) {
            cx.fail(Finding{"quotient unavailable: " + q.error, {{"Q", ids(q.modulus)}}});
            continue;
        }
        if (auto v = correspondence_violation(*q.structure)) {
            cx.fail(Finding{"pi^-1(J_g) differs from pi^-1(J)_g + Q",
                            {{"Q", ids(q.modulus)}, {"J", ids(v->quotient_ideal)}, {"g", {v->grade}}}});
            continue;
        }
        if (auto v = correspondence_violation(*q.structure, true)) {
            ++literal_mismatch;
            cx.out.findings.push_back(Finding{"note: pi^-1(J_g) differs from pi^-1(J)_g without + Q",
                                              {{"Q", ids(q.modulus)}, {"J", ids(v->quotient_ideal)}, {"g", {v->grade}}}});
        }
    }
    cx.finish(std::to_string(s.quotients.size()) + " quotient(s) valid with pi^-1(J_g) = pi^-1(J)_g + Q; " +
              std::to_string(literal_mismatch) + " differ without + Q");
}

inline void check_quotient_primality(Context& cx, const StructureSubject& s) {
    const IdealLattice& lat = *s.lattice;
    if (s.quotients.empty()) return cx.not_applicable("no proper graded ideals");
    for (const auto& q : s.quotients) {
        if (!q.structure) {
            cx.fail(Finding{"quotient unavailable: " + q.error, {{"Q", ids(q.modulus)}}});
            continue;
        }
        const auto& qs = *q.structure;
        for (SubsetMask p : lat.proper_graded_ideals()) {
            if (!q.modulus.subset_of(p)) continue;
            ++cx.out.instances;
            const SubsetMask img = qs.projection.image(p);
            auto in_n = cx.def(lat, p);
            auto in_q = cx.def(qs.quotient, img);
            if (in_n.verdict != in_q.verdict) {
                Finding f = verdict_finding("verdicts differ", p, in_n);
                f.fields.emplace_back("Q", ids(q.modulus));
                cx.fail(std::move(f));
                cx.out.findings.push_back(verdict_finding("in N/Q", img, in_q));
            }
        }
    }
    cx.finish(std::to_string(cx.out.instances) + " nested pair(s) Q in P agree");
}

inline void check_zero_in_quotient(Context& cx, const StructureSubject& s) {
    const IdealLattice& lat = *s.lattice;
    if (s.quotients.empty()) return cx.not_applicable("no proper graded ideals");
    for (const auto& q : s.quotients) {
        ++cx.out.instances;
        if (!q.structure) {
            cx.fail(Finding{"quotient unavailable: " + q.error, {{"Q", ids(q.modulus)}}});
            continue;
        }
        const auto& ql = q.structure->quotient;
        auto in_n = cx.def(lat, q.modulus);
        auto zero = cx.def(ql, ql.ring().zero_set());
        if (in_n.verdict != zero.verdict) {
            cx.fail(verdict_finding("verdicts differ", q.modulus, in_n));
            cx.out.findings.push_back(verdict_finding("{0} in N/I", ql.ring().zero_set(), zero));
        }
    }
    cx.finish(std::to_string(cx.out.instances) + " ideal(s) agree with {0} in the quotient");
}

// Products -------------------------------------------------------------------

inline bool factors_unital(const StructureSubject& s) {
    return s.left->lattice->ring().one() && s.right->lattice->ring().one();
}

inline void check_product_transfer(Context& cx, const StructureSubject& s) {
    if (!factors_unital(s)) return cx.not_applicable("a factor has no multiplicative identity");
    const IdealLattice& lat = *s.lattice;
    const IdealLattice& n = *s.left->lattice;
    const unsigned m_order = s.right->lattice->ring().order();
    const SubsetMask m_all = s.right->lattice->ring().all();
    for (SubsetMask p : n.proper_graded_ideals()) {
        ++cx.out.instances;
        const SubsetMask pm = product_ideal(lat.structure(), m_order, p, m_all);
        auto in_n = cx.def(n, p);
        auto in_prod = cx.def(lat, pm);
        if (in_n.verdict != in_prod.verdict) {
            Finding f = verdict_finding("P and P x M disagree", pm, in_prod);
            cx.fail(std::move(f));
            cx.out.findings.push_back(verdict_finding("in N", p, in_n));
        }
    }
    if (cx.out.instances == 0) return cx.not_applicable(s.left->name + " has no proper graded ideal");
    cx.finish(std::to_string(cx.out.instances) + " proper graded P of " + s.left->name + " agree with P x M");
}

/// Ideals reachable as products of at most `bound` ideals from `gens`.
inline std::vector<SubsetMask> bounded_products(const FiniteNearRing& r, const std::vector<SubsetMask>& gens,
                                                unsigned bound) {
    std::vector<SubsetMask> reached = gens, frontier = gens;
    for (unsigned len = 2; len <= bound; ++len) {
        std::vector<SubsetMask> next;
        for (SubsetMask x : frontier)
            for (SubsetMask p : gens) {
                const SubsetMask y = ideal_product(r, x, p);
                if (std::find(reached.begin(), reached.end(), y) == reached.end()) {
                    reached.push_back(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    std::sort(reached.begin(), reached.end(), canonical_less);
    return reached;
}

inline bool all_proper_factor(const IdealLattice& lat, const std::vector<SubsetMask>& primes, unsigned bound,
                              SubsetMask* missing = nullptr) {
    const auto reach = bounded_products(lat.ring(), primes, bound);
    for (SubsetMask i : lat.ideals()) {
        if (!lat.is_proper(i)) continue;
        if (std::find(reach.begin(), reach.end(), i) == reach.end()) {
            if (missing) *missing = i;
            return false;
        }
    }
    return true;
}

inline void check_product_factorization(Context& cx, const StructureSubject& s) {
    const unsigned bound = cx.opt.factor_bound;
    const std::string bound_text = "length <= " + std::to_string(bound);
    if (!factors_unital(s)) return cx.not_applicable("a factor has no multiplicative identity");
    SubsetMask miss;
    if (!all_proper_factor(*s.left->lattice, s.left->primes, bound, &miss))
        return cx.not_applicable(miss.to_string() + " in " + s.left->name + " is not a product of graded primes of " +
                                 bound_text);
    if (!all_proper_factor(*s.right->lattice, s.right->primes, bound, &miss))
        return cx.not_applicable(miss.to_string() + " in " + s.right->name +
                                 " is not a product of graded primes of " + bound_text);
    const IdealLattice& lat = *s.lattice;
    const auto reach = bounded_products(lat.ring(), s.primes, bound);
    for (SubsetMask i : lat.ideals()) {
        if (!lat.is_proper(i)) continue;
        ++cx.out.instances;
        if (std::find(reach.begin(), reach.end(), i) == reach.end())
            cx.fail(Finding{"not a product of graded primes of " + bound_text, {{"I", ids(i)}, {"bound", {bound}}}});
    }
    cx.finish(std::to_string(cx.out.instances) + " proper ideal(s) factor into graded primes with " + bound_text);
}

inline void check_product_classification(Context& cx, const StructureSubject& s) {
    if (!factors_unital(s)) return cx.not_applicable("a factor has no multiplicative identity");
    const IdealLattice& lat = *s.lattice;
    const StructureSubject& n = *s.left;
    const StructureSubject& m = *s.right;
    const unsigned m_order = m.lattice->ring().order();
    const SubsetMask n_all = n.lattice->ring().all(), m_all = m.lattice->ring().all();
    auto contains = [](const std::vector<SubsetMask>& v, SubsetMask x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    for (SubsetMask p : s.primes) {
        ++cx.out.instances;
        auto rect = as_rectangle(m_order, p);
        const bool left_form = rect && rect->second == m_all && contains(n.primes, rect->first);
        const bool right_form = rect && rect->first == n_all && contains(m.primes, rect->second);
        if (!left_form && !right_form) cx.fail(Finding{"graded prime of neither form I x M nor N x J", {{"P", ids(p)}}});
    }
    // Every listed form is itself graded prime.
    std::vector<SubsetMask> forms;
    for (SubsetMask i : n.primes) forms.push_back(product_ideal(lat.structure(), m_order, i, m_all));
    for (SubsetMask j : m.primes) forms.push_back(product_ideal(lat.structure(), m_order, n_all, j));
    for (SubsetMask f : forms) {
        ++cx.out.instances;
        if (!contains(s.primes, f)) cx.fail(verdict_finding("form I x M or N x J is not graded prime", f, cx.def(lat, f)));
    }
    cx.finish(std::to_string(s.primes.size()) + " graded prime(s), each of the form I x M or N x J");
}

inline bool nontrivial_factors(const StructureSubject& s) {
    return s.left->lattice->ring().order() > 1 && s.right->lattice->ring().order() > 1;
}

inline void check_zero_product(Context& cx, const StructureSubject& s) {
    if (!nontrivial_factors(s)) return cx.not_applicable("a factor is the trivial near-ring");
    const IdealLattice& lat = *s.lattice;
    ++cx.out.instances;
    const SubsetMask zero = lat.ring().zero_set();
    auto rep = cx.def(lat, zero);
    if (rep.verdict) return cx.fail(verdict_finding("{0} x {0} is graded prime", zero, rep));
    cx.out.findings.push_back(verdict_finding("{0} x {0} is not graded prime", zero, rep));
    cx.finish("{0} x {0} is not graded prime");
}

inline void check_all_prime_product(Context& cx, const StructureSubject& s) {
    const IdealLattice& lat = *s.lattice;
    const auto proper = lat.proper_graded_ideals();
    cx.out.instances = static_cast<unsigned>(proper.size());
    for (SubsetMask p : proper) {
        auto rep = cx.def(lat, p);
        if (rep.verdict) continue;
        cx.out.findings.push_back(verdict_finding("proper graded ideal that is not graded prime", p, rep));
        return cx.finish(p.to_string() + " is not graded prime, so the hypothesis is unmet");
    }
    if (nontrivial_factors(s))
        return cx.fail(Finding{"every proper graded ideal graded prime with nontrivial factors", {}});
    cx.finish("every proper graded ideal is graded prime and a factor is trivial");
}

inline void dispatch(Context& cx, std::string_view id, const StructureSubject& s) {
    if (id == "2.3") return check_maximal(cx, s, true, false);
    if (id == "2.4") return check_chains(cx, s);
    if (id == "2.4-cex") return check_chain_counterexample(cx, s);
    if (id == "2.5") return check_power_descent(cx, s, true);
    if (id == "2.6") return check_power_descent(cx, s, false);
    if (id == "2.6-note") return check_prime_implies_graded_prime(cx, s);
    if (id == "2.7-analog") return check_graded_prime_not_prime(cx, s);
    if (id == "2.8") return check_agreement(cx, s, {Checker::homog, Checker::t28c2, Checker::t28c3});
    if (id == "2.9") return check_agreement(cx, s, {Checker::p29c1, Checker::p29c2});
    if (id == "2.10") return check_transfer(cx, s);
    if (id == "2.11") return check_correspondence(cx, s);
    if (id == "2.12") return check_quotient_primality(cx, s);
    if (id == "2.13") return check_agreement(cx, s, {Checker::p213});
    if (id == "2.14") return check_zero_in_quotient(cx, s);
    if (id == "2.15") return check_maximal(cx, s, false, true);
    if (id == "2.16") return check_maximal(cx, s, true, false);
    if (id == "2.17") return check_kernel(cx, s);
    if (id == "2.18") return check_product_transfer(cx, s);
    if (id == "2.19") return check_product_factorization(cx, s);
    if (id == "2.20") return check_product_classification(cx, s);
    if (id == "2.21") return check_zero_product(cx, s);
    if (id == "2.22") return check_all_prime_product(cx, s);
    throw std::logic_error("no structure check for " + std::string(id));
}

inline void dispatch(Context& cx, std::string_view id, const HomSubject& h) {
    if (id == "2.10") return check_transfer(cx, h);
    if (id == "2.17") return check_kernel(cx, h);
    if (id == "2.17-remark") return check_kernel_converse(cx, h);
    throw std::logic_error("no homomorphism check for " + std::string(id));
}

}  // namespace detail

/// Runs one check on one structure (or product) subject.
inline TheoremCheck check(std::string_view id, const StructureSubject& s, const HarnessOptions& opt = {}) {
    const TheoremInfo& info = find_theorem(id);
    TheoremCheck out{std::string(info.id), s.name, CheckStatus::not_applicable, {}, 0, {}};
    detail::Context cx{opt, out};
    if (s.left && info.on_product) {
        detail::dispatch(cx, info.id, s);
    } else if (info.on_structure) {
        detail::dispatch(cx, info.id, s);
    } else {
        cx.not_applicable(info.on_product ? "not a direct product" : "applies to homomorphisms only");
    }
    return out;
}

inline TheoremCheck check(std::string_view id, const HomSubject& h, const HarnessOptions& opt = {}) {
    const TheoremInfo& info = find_theorem(id);
    TheoremCheck out{std::string(info.id), h.name, CheckStatus::not_applicable, {}, 0, {}};
    detail::Context cx{opt, out};
    if (info.on_hom)
        detail::dispatch(cx, info.id, h);
    else
        cx.not_applicable("applies to structures only");
    return out;
}

/**
 * Runs the selected theorem ids (all when empty) on every subject.
 *
 * Structures come first in their given order, then homomorphisms; within a
 * subject checks follow catalog order. Checks inapplicable to a subject's
 * kind are skipped unless named explicitly. Tasks may run on several
 * threads; results land in fixed slots so the report does not depend on
 * scheduling.
 */
inline HarnessReport run_all(const SubjectSet& subjects, const HarnessOptions& opt = {},
                             const std::vector<std::string>& theorem_ids = {}) {
    std::vector<const TheoremInfo*> selected;
    if (theorem_ids.empty()) {
        for (const auto& t : theorem_catalog()) selected.push_back(&t);
    } else {
        for (const auto& id : theorem_ids) selected.push_back(&find_theorem(id));
    }
    const bool explicit_ids = !theorem_ids.empty();

    std::vector<std::function<TheoremCheck()>> tasks;
    for (const auto& s : subjects.structures)
        for (const TheoremInfo* t : selected) {
            const bool fits = s->left ? (t->on_product || t->on_structure) : t->on_structure;
            if (fits || (explicit_ids && !t->on_hom))
                tasks.emplace_back([&opt, s, t] { return check(t->id, *s, opt); });
        }
    for (const auto& h : subjects.homs)
        for (const TheoremInfo* t : selected)
            if (t->on_hom) tasks.emplace_back([&opt, &h, t] { return check(t->id, h, opt); });

    std::vector<TheoremCheck> results(tasks.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(tasks.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) results[i] = tasks[i]();
        } catch (...) {
            errors[w] = std::current_exception();
            next = tasks.size();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return HarnessReport{opt.ideal_scope, opt.factor_bound, std::move(results)};
}

}  // namespace gnr
