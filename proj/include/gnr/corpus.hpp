#pragma once

/**
 * @file corpus.hpp
 * @brief Built-in graded near-rings used by the theorem harness and tests.
 *
 * Entry names are stable identifiers accepted by the CLI.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnr/algebra.hpp"
#include "gnr/constructions.hpp"
#include "gnr/grading.hpp"

namespace gnr {

struct CorpusEntry {
    std::string name;
    GradedNearRing structure;
    std::string notes;
    std::vector<std::string> labels;
    /// Names of the factors when the entry is a componentwise-graded direct product.
    std::optional<std::pair<std::string, std::string>> factors;
};

/// A surjective homomorphism between two corpus entries.
struct CorpusHom {
    std::string name;
    std::string source;
    std::string target;
    std::vector<Element> map;
};

enum class MonoidChoice {
    trivial,         ///< N_e = Z_n
    or_monoid,       ///< N_0 = Z_n, N_1 = {0} over ({0,1}, OR)
    multiplicative,  ///< N_1 = Z_n, N_0 = {0} over ({0,1}, *)
};

inline GradedNearRing cyclic_graded(unsigned n, MonoidChoice choice) {
    if (n > max_order) throw Error(ErrorKind::OrderCapExceeded, "Z_" + std::to_string(n));
    FiniteNearRing r = cyclic_ring(n);
    const SubsetMask all = r.all(), zero = r.zero_set();
    switch (choice) {
        case MonoidChoice::trivial: return make_graded(std::move(r), trivial_monoid(), {all});
        case MonoidChoice::or_monoid: return make_graded(std::move(r), or_monoid(), {all, zero});
        case MonoidChoice::multiplicative: return make_graded(std::move(r), multiplicative_monoid(), {zero, all});
    }
    throw std::logic_error("unknown monoid choice");
}

/**
 * M(Z_k): all maps Z_k -> Z_k, pointwise addition, (f*g)(x) = f(g(x)).
 * The map f has index sum_x f(x) * k^x. With zero_preserving only the maps
 * fixing 0 are kept, indexed by sum_{x>0} f(x) * k^(x-1).
 */
inline FiniteNearRing map_near_ring(unsigned k, bool zero_preserving = false) {
    const unsigned free_points = zero_preserving ? k - 1 : k;
    unsigned n = 1;
    for (unsigned i = 0; i < free_points; ++i) n *= k;
    if (n > max_order) throw Error(ErrorKind::OrderCapExceeded, "M(Z_" + std::to_string(k) + ")");
    const unsigned offset = zero_preserving ? 1 : 0;
    auto decode = [&](Element idx) {
        std::vector<unsigned> f(k, 0);
        for (unsigned x = offset; x < k; ++x) {
            f[x] = idx % k;
            idx /= k;
        }
        return f;
    };
    auto encode = [&](const std::vector<unsigned>& f) {
        Element idx = 0;
        for (unsigned x = k; x-- > offset;) idx = idx * k + f[x];
        return idx;
    };
    TableRows add(n, std::vector<Element>(n)), mul = add;
    for (Element a = 0; a < n; ++a) {
        const auto f = decode(a);
        for (Element b = 0; b < n; ++b) {
            const auto g = decode(b);
            std::vector<unsigned> s(k), c(k);
            for (unsigned x = 0; x < k; ++x) {
                s[x] = (f[x] + g[x]) % k;
                c[x] = f[g[x]];
            }
            add[a][b] = encode(s);
            mul[a][b] = encode(c);
        }
    }
    return validate_near_ring(n, add, mul);
}

/// Z[i]/(n), element a + b*i at index a + n*b, graded by Z_2: reals in grade 0, imaginaries in grade 1.
inline GradedNearRing gaussian_mod(unsigned n) {
    if (n * n > max_order) throw Error(ErrorKind::OrderCapExceeded, "Z[i]/(" + std::to_string(n) + ")");
    const unsigned order = n * n;
    TableRows add(order, std::vector<Element>(order)), mul = add;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                for (unsigned d = 0; d < n; ++d) {
                    const Element x = a + n * b, y = c + n * d;
                    add[x][y] = (a + c) % n + n * ((b + d) % n);
                    const unsigned re = (a * c + (n - (b * d) % n)) % n;
                    const unsigned im = (a * d + b * c) % n;
                    mul[x][y] = re + n * im;
                }
    SubsetMask reals, imaginaries;
    for (unsigned a = 0; a < n; ++a) {
        reals.insert(a);
        imaginaries.insert(n * a);
    }
    return make_graded(validate_near_ring(order, add, mul), cyclic_group_2(), {reals, imaginaries});
}

/// S_3 under composition as addition, with multiplication x*y = x.
inline FiniteNearRing symmetric3_left_projection() {
    const std::vector<std::array<unsigned, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index = [&](const std::array<unsigned, 3>& p) {
        return static_cast<Element>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    };
    TableRows add(6, std::vector<Element>(6)), mul = add;
    for (Element a = 0; a < 6; ++a)
        for (Element b = 0; b < 6; ++b) {
            std::array<unsigned, 3> c{};
            for (unsigned x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            add[a][b] = index(c);
            mul[a][b] = a;
        }
    return validate_near_ring(6, add, mul);
}

namespace detail {

inline std::vector<std::string> numeric_labels(unsigned n) {
    std::vector<std::string> out;
    for (unsigned i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

inline std::vector<std::string> gaussian_labels(unsigned n) {
    std::vector<std::string> out;
    for (unsigned b = 0; b < n; ++b)
        for (unsigned a = 0; a < n; ++a) {
            if (b == 0) out.push_back(std::to_string(a));
            else if (a == 0) out.push_back((b == 1 ? std::string() : std::to_string(b)) + "i");
            else out.push_back(std::to_string(a) + "+" + (b == 1 ? std::string() : std::to_string(b)) + "i");
        }
    return out;
}

inline std::vector<std::string> map_labels(unsigned k, bool zero_preserving) {
    const unsigned offset = zero_preserving ? 1 : 0;
    unsigned n = 1;
    for (unsigned i = offset; i < k; ++i) n *= k;
    std::vector<std::string> out;
    for (unsigned idx = 0; idx < n; ++idx) {
        std::string s = "[";
        unsigned v = idx;
        for (unsigned x = 0; x < k; ++x) {
            if (x > 0) s += ',';
            unsigned fx = 0;
            if (x >= offset) {
                fx = v % k;
                v /= k;
            }
            s += std::to_string(fx);
        }
        out.push_back(s + "]");
    }
    return out;
}

inline std::vector<std::string> pair_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back("(" + x + "," + y + ")");
    return out;
}

inline std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> c;
    auto add_entry = [&](std::string name, GradedNearRing gn, std::string notes, std::vector<std::string> labels) {
        c.push_back(CorpusEntry{std::move(name), std::move(gn), std::move(notes), std::move(labels), std::nullopt});
    };
    auto get = [&](const std::string& name) -> const CorpusEntry& {
        return *std::find_if(c.begin(), c.end(), [&](const CorpusEntry& e) { return e.name == name; });
    };

    add_entry("z1", cyclic_graded(1, MonoidChoice::or_monoid), "trivial near-ring over the OR monoid",
              numeric_labels(1));
    add_entry("z2-or", cyclic_graded(2, MonoidChoice::or_monoid), "Z2 with N_0 = Z2, N_1 = {0} over ({0,1}, OR)",
              numeric_labels(2));
    add_entry("z6-or", cyclic_graded(6, MonoidChoice::or_monoid), "Z6 with N_0 = Z6, N_1 = {0} over ({0,1}, OR)",
              numeric_labels(6));
    add_entry("z8-or", cyclic_graded(8, MonoidChoice::or_monoid), "Z8 with N_0 = Z8, N_1 = {0} over ({0,1}, OR)",
              numeric_labels(8));
    add_entry("z2-mult", cyclic_graded(2, MonoidChoice::multiplicative),
              "Z2 with N_1 = Z2, N_0 = {0} over ({0,1}, *); the grade monoid is read multiplicatively because "
              "the additive group Z2 does not admit this grading (1*1 = 1 is not in N_0)",
              numeric_labels(2));
    add_entry("mz2", trivially_graded(map_near_ring(2)),
              "all maps on Z2 under pointwise addition and composition, trivial grading; not a ring: "
              "left distributivity fails at (a,b,c) = (1,0,0) since [1,0]o([0,0]+[0,0]) = [1,1] != [0,0]",
              map_labels(2, false));
    add_entry("mz3", trivially_graded(map_near_ring(3)),
              "all maps on Z3 under pointwise addition and composition, trivial grading", map_labels(3, false));
    {
        FiniteNearRing m0 = map_near_ring(3, true);
        SubsetMask all = m0.all(), zero = m0.zero_set();
        add_entry("m0z3-or", make_graded(std::move(m0), or_monoid(), {all, zero}),
                  "zero-preserving maps on Z3 under pointwise addition and composition, graded over ({0,1}, OR); "
                  "zero-symmetric, not a ring",
                  map_labels(3, true));
    }
    add_entry("s3-left", trivially_graded(symmetric3_left_projection()),
              "S3 (non-abelian addition) with multiplication x*y = x, trivial grading",
              {"()", "(12)", "(01)", "(012)", "(021)", "(02)"});
    add_entry("gauss2", gaussian_mod(2), "finite analog Z[i]/(2) of the Gaussian integers, graded by Z2 "
                                         "(grade 0 = real residues, grade 1 = imaginary residues)",
              gaussian_labels(2));
    add_entry("gauss3", gaussian_mod(3), "finite analog Z[i]/(3) of the Gaussian integers, graded by Z2",
              gaussian_labels(3));
    add_entry("gauss4", gaussian_mod(4),
              "finite analog Z[i]/(4) of the Gaussian integers, graded by Z2; claims about Z[i] are re-derived "
              "here by enumeration, not assumed",
              gaussian_labels(4));

    auto add_product = [&](std::string name, const std::string& left, const std::string& right, std::string notes) {
        const CorpusEntry& l = get(left);
        const CorpusEntry& r = get(right);
        CorpusEntry e{std::move(name), direct_product(l.structure, r.structure), std::move(notes),
                      pair_labels(l.labels, r.labels), std::pair{left, right}};
        c.push_back(std::move(e));
    };
    add_product("z2xz2", "z2-mult", "z2-mult", "Z2 x Z2 with the componentwise grading (N x M)_g = N_g x M_g");
    add_product("z6xz2", "z6-or", "z2-or", "Z6 x Z2 with the componentwise grading over ({0,1}, OR)");
    add_product("z1xz2", "z1", "z2-or", "Z1 x Z2 over ({0,1}, OR); one factor is the trivial near-ring");
    add_product("m0z3xz2", "m0z3-or", "z2-or",
                "zero-preserving maps on Z3 times Z2 with the componentwise grading over ({0,1}, OR); not a ring");
    return c;
}

}  // namespace detail

/// The registry, built on first use.
inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = detail::build_corpus();
    return entries;
}

inline const CorpusEntry* find_corpus_entry(std::string_view name) {
    for (const auto& e : corpus())
        if (e.name == name) return &e;
    return nullptr;
}

/// x -> x mod m from Z_n.
inline std::vector<Element> reduction_map(unsigned n, unsigned m) {
    std::vector<Element> map(n);
    for (Element x = 0; x < n; ++x) map[x] = x % m;
    return map;
}

inline const std::vector<CorpusHom>& corpus_homs() {
    static const std::vector<CorpusHom> homs{{"z8-mod-2", "z8-or", "z2-or", reduction_map(8, 2)},
                                             {"z6-mod-2", "z6-or", "z2-or", reduction_map(6, 2)}};
    return homs;
}

}  // namespace gnr
