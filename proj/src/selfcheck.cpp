#include "tb/selfcheck.hpp"

#include "tb/contfrac.hpp"
#include "tb/epi.hpp"
#include "tb/errors.hpp"
#include "tb/farey.hpp"
#include "tb/heckoid.hpp"
#include "tb/pairs.hpp"
#include "tb/slope.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace tb::selfcheck {

namespace {

using Clock = std::chrono::steady_clock;

// Runs body(fail); body reports cases via its return value and calls
// fail(detail) on the first violation.
CheckResult run_check(const std::string& name,
                      const std::function<long long(std::string&)>& body) {
    CheckResult out{name, true, 0, 0.0, ""};
    auto start = Clock::now();
    try {
        out.cases = body(out.detail);
        out.pass = out.detail.empty();
    } catch (const error& e) {
        out.pass = false;
        out.detail = std::string(e.name()) + ": " + e.what();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = e.what();
    }
    out.millis = std::chrono::duration<double, std::milli>(Clock::now() - start)
                     .count();
    return out;
}

std::vector<Slope> coprime_slopes(long max_p, bool hyperbolic_only) {
    std::vector<Slope> out;
    for (long p = 2; p <= max_p; ++p) {
        for (long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            if (hyperbolic_only && (q == 1 || q == p - 1)) continue;
            out.emplace_back(q, p);
        }
    }
    return out;
}

Slope random_slope(std::mt19937_64& rng, long max_abs_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(0, max_den);
    while (true) {
        long n = num(rng), d = den(rng);
        if (n != 0 || d != 0) {
            return Slope(n, d);
        }
    }
}

} // namespace

CheckResult check_slope_equivalence(long max_p) {
    return run_check("slope-equivalence", [&](std::string& fail) {
        long long cases = 0;
        for (long p = 1; p <= max_p; ++p) {
            std::vector<long> residues;
            for (long q = 0; q < p; ++q) {
                if (std::gcd(q, p) == 1) residues.push_back(q);
            }
            if (p == 1) residues = {0};
            auto canon = [&](long q) {
                if (p <= 1) return 0L;
                return std::min<long>(
                    q, mod_inverse(Int(q), Int(p)).convert_to<long>());
            };
            for (long q1 : residues) {
                Slope a(q1, p);
                if (!slope_equivalent(a, a)) {
                    fail = "not reflexive at " + a.str();
                    return cases;
                }
                for (long q2 : residues) {
                    ++cases;
                    Slope b(q2, p);
                    bool fwd = slope_equivalent(a, b);
                    if (fwd != slope_equivalent(b, a) ||
                        fwd != (canon(q1) == canon(q2))) {
                        fail = "equivalence broken at " + a.str() + ", " +
                               b.str();
                        return cases;
                    }
                    if (fwd &&
                        link_kind(a).variant != link_kind(b).variant) {
                        fail = "kind differs within class " + a.str();
                        return cases;
                    }
                }
            }
        }
        return cases;
    });
}

CheckResult check_even_expansions(long max_p) {
    return run_check("even-expansions", [&](std::string& fail) {
        long long cases = 0;
        for (long p = 3; p <= max_p; ++p) {
            for (long q = 1; 2 * q <= p; ++q) {
                if (std::gcd(q, p) != 1) continue;
                if (p % 2 == 1 && q % 2 == 1) continue;
                ++cases;
                Slope r(q, p);
                EvenCF cf = cf_even(r);
                if (cf_eval(cf.entries()) != r) {
                    fail = "round trip failed at " + r.str();
                    return cases;
                }
                if ((cf.length() % 2 == 0) != (p % 2 == 1)) {
                    fail = "length parity failed at " + r.str();
                    return cases;
                }
                long q2p = (q * q) % p;
                long q22p = static_cast<long>(
                    (static_cast<long long>(q) * q) % (2 * p));
                EvenSymmetry s = even_symmetry_class(r);
                bool law = p % 2 == 1
                               ? (s == EvenSymmetry::Antipalindromic) ==
                                     (q2p == 1)
                               : (s == EvenSymmetry::Palindromic) ==
                                     (q22p == 1);
                if (!law) {
                    fail = "symmetry law failed at " + r.str();
                    return cases;
                }
            }
        }
        return cases;
    });
}

CheckResult check_positive_expansions(long max_p) {
    return run_check("positive-expansions", [&](std::string& fail) {
        long long cases = 0;
        for (long p = 3; p <= max_p; ++p) {
            for (long q = 1; 2 * q <= p; ++q) {
                if (std::gcd(q, p) != 1) continue;
                ++cases;
                Slope r(q, p);
                PosCF cf = cf_positive(r);
                if (cf_eval(cf.entries) != r || cf.entries.front() < 2 ||
                    cf.entries.back() < 2) {
                    fail = "expansion invalid at " + r.str();
                    return cases;
                }
                long q2p = (q * q) % p;
                long q22p = static_cast<long>(
                    (static_cast<long long>(q) * q) % (2 * p));
                PosSymmetry s = pos_symmetry_class(r);
                bool even_mid = p % 2 == 0 && q22p == 1;
                bool odd_mid = (p % 2 == 1 && q2p == 1) ||
                               (p % 2 == 0 && q22p == p + 1);
                if ((s == PosSymmetry::SymEvenMiddle) != even_mid ||
                    (s == PosSymmetry::SymOddMiddle) != odd_mid) {
                    fail = "symmetry law failed at " + r.str();
                    return cases;
                }
            }
        }
        return cases;
    });
}

CheckResult check_reflections(std::uint64_t seed, int cases) {
    return run_check("farey-reflections", [&](std::string& fail) {
        std::mt19937_64 rng(seed);
        const ProjMatrix t{1, 1, 0, 1};
        const ProjMatrix s{0, -1, 1, 0};
        const ProjMatrix r0{1, 0, 0, -1};
        const FareyEdge base(Slope(0, 1), Slope::infinity());
        long long done = 0;
        for (int i = 0; i < cases; ++i, ++done) {
            ProjMatrix m = ProjMatrix::identity();
            for (int j = 0; j < 14; ++j) {
                switch (rng() % 3) {
                case 0: m = m * t; break;
                case 1: m = m * s; break;
                default: m = m * r0; break;
                }
            }
            FareyEdge e = base.transformed(m);
            ProjMatrix refl = e.reflection();
            if (refl.det() != -1 || !(refl * refl).is_proj_identity() ||
                refl.apply(e.first()) != e.first() ||
                refl.apply(e.second()) != e.second()) {
                fail = "reflection law failed at " + e.str();
                return done;
            }
        }
        return done;
    });
}

CheckResult check_reduction(std::uint64_t seed, int cases) {
    return run_check("farey-reduction", [&](std::string& fail) {
        std::mt19937_64 rng(seed);
        const Slope rs[] = {Slope(1, 3), Slope(2, 5), Slope(3, 7),
                            Slope(2, 7), Slope(5, 17)};
        long long done = 0;
        for (int i = 0; i < cases; ++i, ++done) {
            const Slope& r = rs[i % 5];
            Slope x = random_slope(rng, 4000, 80);
            FoldResult red = reduce(x, r);
            if (red.word.apply(x) != red.result) {
                fail = "word does not certify reduce(" + x.str() + ", " +
                       r.str() + ")";
                return done;
            }
            if (reduce(red.result, r).result != red.result) {
                fail = "reduce not idempotent at " + x.str();
                return done;
            }
            std::vector<FareyEdge> walls = wall_edges(r);
            Slope moved = x;
            for (int j = 0, len = static_cast<int>(rng() % 7); j < len; ++j) {
                moved = walls[rng() % 4].reflection().apply(moved);
            }
            if (reduce(moved, r).result != red.result) {
                fail = "orbit invariance failed at " + x.str();
                return done;
            }
            if (orbit_member(x, r).positive() !=
                orbit_member(x + Int(2), r).positive()) {
                fail = "translation invariance failed at " + x.str();
                return done;
            }
        }
        return done;
    });
}

CheckResult check_orbit_oracle(int depth, long max_den) {
    return run_check("orbit-oracle", [&](std::string& fail) {
        const Slope rs[] = {Slope(1, 3), Slope(2, 5), Slope(3, 7),
                            Slope(2, 7), Slope(5, 17)};
        long long cases = 0;
        for (const Slope& r : rs) {
            for (const Slope& x : orbit_bfs(r, depth, Int(max_den))) {
                ++cases;
                if (!x.is_infinity() && x.den() % r.den() != 0) {
                    fail = "denominator invariant failed at " + x.str();
                    return cases;
                }
                MembershipVerdict v = orbit_member(x, r);
                if (!v.positive()) {
                    fail = "oracle element rejected: " + x.str() + " at " +
                           r.str();
                    return cases;
                }
                Slope image = v.word.to_matrix().apply(x);
                if (image != r && !image.is_infinity()) {
                    fail = "witness invalid for " + x.str();
                    return cases;
                }
            }
        }
        return cases;
    });
}

CheckResult check_isometry_trichotomy(long max_p) {
    return run_check("isometry-trichotomy", [&](std::string& fail) {
        long long cases = 0;
        for (const Slope& r : coprime_slopes(max_p, true)) {
            ++cases;
            long p = r.den().convert_to<long>();
            long q = r.num().convert_to<long>();
            long q2p = (q * q) % p;
            long q22p =
                static_cast<long>((static_cast<long long>(q) * q) % (2 * p));
            bool c1 = q2p != 1;
            bool c2 = (p % 2 == 1 && q2p == 1) ||
                      (p % 2 == 0 && q22p == p + 1);
            bool c3 = p % 2 == 0 && q22p == 1;
            IsomGroup g = isometry_group(r);
            if (int(c1) + int(c2) + int(c3) != 1 ||
                (g == IsomGroup::Z2xZ2) != c1 || (g == IsomGroup::D4) != c2 ||
                (g == IsomGroup::Z2cubed) != c3) {
                fail = "trichotomy failed at " + r.str();
                return cases;
            }
        }
        return cases;
    });
}

CheckResult check_pair_ledger(long max_p) {
    return run_check("pair-ledger", [&](std::string& fail) {
        long long cases = 0;
        for (const Slope& r : coprime_slopes(max_p, true)) {
            const Int& p = r.den();
            ClassificationReport rep = classify(r);
            if (rep.verdict != std::vector<PairKindTag>{PairKindTag::Upper,
                                                        PairKindTag::Lower} ||
                rep.upper_lower_equivalent) {
                fail = "verdict wrong at " + r.str();
                return cases;
            }
            for (const PairCandidate& c : rep.ledger) {
                ++cases;
                bool is_ul = c.kind.tag == PairKindTag::Upper ||
                             c.kind.tag == PairKindTag::Lower;
                if (c.generates != is_ul) {
                    fail = "generator verdict wrong at " + r.str() + " " +
                           c.kind.str();
                    return cases;
                }
                if ((c.kind.tag == PairKindTag::LongUpper ||
                     c.kind.tag == PairKindTag::LongLower) &&
                    c.omega.residues.front() != 0) {
                    fail = "long pair omega nonzero at " + r.str();
                    return cases;
                }
                if (c.kind.tag == PairKindTag::IntermediateL ||
                    c.kind.tag == PairKindTag::IntermediateR) {
                    for (const Int& k : c.omega.residues) {
                        if (k != 0 && 2 * k != p) {
                            fail = "intermediate omega wrong at " + r.str();
                            return cases;
                        }
                    }
                }
                if (c.kind.tag == PairKindTag::Extra) {
                    const Int& pi = c.kind.arc_slope->den();
                    if (c.omega.residues.front() != pi || pi <= 1 || pi >= p ||
                        gcd(pi, p) <= 1) {
                        fail = "extra omega wrong at " + r.str();
                        return cases;
                    }
                }
            }
            // the exact split identities, where the split exists
            bool knot = is_odd(p);
            long pp = p.convert_to<long>();
            long q = r.num().convert_to<long>();
            long q2p = (q * q) % pp;
            long q22p =
                static_cast<long>((static_cast<long long>(q) * q) % (2 * pp));
            if (knot ? q2p == 1 : q22p == 1) {
                ExtraSplit split = extra_split(r);
                Int pairing = farey_pairing(split.s1, split.s2);
                Int sum = split.s1.den() * split.s2.num() +
                          split.s2.den() * split.s1.num();
                bool ok =
                    knot ? pairing == 2 && p == split.s1.den() * split.s2.den() &&
                               (sum == 2 * q || sum == 2 * (pp - q))
                         : pairing == 1 &&
                               p == 2 * split.s1.den() * split.s2.den() &&
                               (sum == q || sum == pp - q);
                if (!ok) {
                    fail = "split identities failed at " + r.str();
                    return cases;
                }
            }
        }
        return cases;
    });
}

CheckResult check_mirror_inverse(long max_p) {
    return run_check("mirror-inverse-invariance", [&](std::string& fail) {
        long long cases = 0;
        for (const Slope& r : coprime_slopes(max_p, true)) {
            ++cases;
            Slope mirror(r.den() - r.num(), r.den());
            if (isometry_group(r) != isometry_group(mirror) ||
                isometry_group(r) != isometry_group(inverse_slope(r))) {
                fail = "isometry invariance failed at " + r.str();
                return cases;
            }
            auto profile = [](const Slope& s) {
                std::multiset<std::string> kinds;
                std::multiset<Int> omegas;
                for (const PairCandidate& c : candidates(s)) {
                    kinds.insert(pair_kind_name(c.kind.tag));
                    if (c.omega.kind == OmegaValue::Kind::Exact) {
                        Int k = mod_euclid(c.omega.residues.front(), s.den());
                        omegas.insert(std::min(k, Int(s.den() - k)));
                    }
                }
                return std::pair(kinds, omegas);
            };
            if (profile(r) != profile(mirror)) {
                fail = "candidate profile differs from mirror at " + r.str();
                return cases;
            }
        }
        return cases;
    });
}

CheckResult check_heckoid(long max_p, std::uint64_t seed) {
    return run_check("heckoid", [&](std::string& fail) {
        long long cases = 0;
        for (long p = 2; p <= max_p; ++p) {
            for (long q = 1; q < p; ++q) {
                if (std::gcd(q, p) != 1) continue;
                ++cases;
                Slope h = hat_r(Slope(q, p));
                if (gcd(abs(h.num()), h.den()) != 1) {
                    fail = "hat not reduced at " + Slope(q, p).str();
                    return cases;
                }
            }
        }
        std::mt19937_64 rng(seed);
        for (int i = 0; i < 1000; ++i) {
            ++cases;
            long p = 1 + static_cast<long>(rng() % 40);
            long q;
            do {
                q = static_cast<long>(rng() % (4 * p)) - 2 * p;
            } while (std::gcd(std::abs(q), p) != 1);
            long long twice_n = 3 + static_cast<long long>(rng() % 20);
            HeckoidDescriptor d = heckoid_descriptor(Slope(q, p), twice_n);
            HeckoidFamily want =
                twice_n % 2 == 0
                    ? HeckoidFamily::M0
                    : (p % 2 == 1 ? HeckoidFamily::M1 : HeckoidFamily::M2);
            bool locus_ok =
                (d.family == HeckoidFamily::M0) ==
                    (d.locus == ParabolicLocus::TwoAnnuli) &&
                (d.family == HeckoidFamily::M1) ==
                    (d.locus == ParabolicLocus::OneAnnulus) &&
                (d.family == HeckoidFamily::M2) ==
                    (d.locus == ParabolicLocus::TwoD22);
            bool isom_ok = (d.family == HeckoidFamily::M0) ==
                           (d.isom == HeckoidIsom::Z2xZ2);
            if (d.family != want || !locus_ok || !isom_ok) {
                fail = "family selection failed at " + Slope(q, p).str() +
                       " with 2n = " + std::to_string(twice_n);
                return cases;
            }
        }
        for (int m = 3; m <= 12; ++m) {
            ++cases;
            HeckeMatrices h = hecke_matrices(m);
            Mat2d qa = mat2_mul(h.q, h.a_m);
            if (std::abs(std::abs(mat2_trace(qa)) -
                         2.0 * std::cos(M_PI / m)) > 1e-12) {
                fail = "Hecke trace failed at m = " + std::to_string(m);
                return cases;
            }
            Mat2d pw = mat2_pow(qa, m);
            double sign = pw[0][0] < 0 ? -1.0 : 1.0;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    double expected = i == j ? sign : 0.0;
                    if (std::abs(pw[i][j] - expected) > 1e-9) {
                        fail = "Hecke power failed at m = " + std::to_string(m);
                        return cases;
                    }
                }
            }
        }
        return cases;
    });
}

CheckResult check_epi_invariance(long max_source_den) {
    return run_check("epi-invariance", [&](std::string& fail) {
        long long cases = 0;
        for (long p : {3L, 5L, 7L}) {
            Slope r(1, p);
            for (long pt = 3; pt <= max_source_den; pt += 2) {
                for (long qt = 1; qt < pt; ++qt) {
                    if (std::gcd(qt, pt) != 1) continue;
                    ++cases;
                    Slope rt(qt, pt);
                    EpiVerdict base = epi_exists(rt, r);
                    bool b = base.exists;
                    if (epi_exists(rt + Int(1), r).exists != b ||
                        epi_exists(Slope(pt - qt, pt), r).exists != b ||
                        epi_exists(inverse_slope(rt), r).exists != b) {
                        fail = "invariance failed at " + rt.str() + " -> " +
                               r.str();
                        return cases;
                    }
                    if (b) {
                        if (pt % p != 0) {
                            fail = "divisibility failed at " + rt.str();
                            return cases;
                        }
                        if (base.clause != EpiVerdict::Clause::TrivialTarget) {
                            Slope image =
                                base.witness->to_matrix().apply(base.tested);
                            if (image != base.target && !image.is_infinity()) {
                                fail = "witness invalid at " + rt.str();
                                return cases;
                            }
                        }
                    }
                }
            }
        }
        return cases;
    });
}

CheckResult check_hom_monotonicity(long max_source_den) {
    return run_check("hom-monotonicity", [&](std::string& fail) {
        const auto& tables = FiniteGroupTable::builtins();
        // hom counts per slope, cached across pairs
        std::map<Slope, std::vector<long long>> counts;
        auto counts_of = [&](const Slope& s) -> const std::vector<long long>& {
            auto it = counts.find(s);
            if (it == counts.end()) {
                Presentation pres = riley_presentation(s);
                std::vector<long long> row;
                row.reserve(tables.size());
                for (const FiniteGroupTable& t : tables) {
                    row.push_back(hom_count(pres, t));
                }
                it = counts.emplace(s, std::move(row)).first;
            }
            return it->second;
        };
        long long cases = 0;
        for (long pt = 3; pt <= max_source_den; pt += 2) {
            for (long qt = 1; qt < pt; ++qt) {
                if (std::gcd(qt, pt) != 1) continue;
                Slope rt(qt, pt);
                for (long p = 3; p <= pt; p += 2) {
                    if (pt % p != 0) continue;
                    for (long q = 1; q < p; ++q) {
                        if (std::gcd(q, p) != 1) continue;
                        Slope r(q, p);
                        if (!epi_exists(rt, r).exists) continue;
                        ++cases;
                        const auto& cs = counts_of(rt);
                        const auto& ct = counts_of(r);
                        for (std::size_t i = 0; i < tables.size(); ++i) {
                            if (ct[i] > cs[i]) {
                                fail = "monotonicity failed for " + rt.str() +
                                       " -> " + r.str() + " over " +
                                       tables[i].name();
                                return cases;
                            }
                        }
                    }
                }
            }
        }
        return cases;
    });
}

std::vector<CheckResult> run_all(long max_p, std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(check_slope_equivalence(std::min(max_p, 100L)));
    out.push_back(check_even_expansions(max_p));
    out.push_back(check_positive_expansions(max_p));
    out.push_back(check_reflections(seed, 1000));
    out.push_back(check_reduction(seed, 1000));
    out.push_back(check_orbit_oracle(6, 500));
    out.push_back(check_isometry_trichotomy(max_p));
    out.push_back(check_pair_ledger(max_p));
    out.push_back(check_mirror_inverse(std::min(max_p, 200L)));
    out.push_back(check_heckoid(max_p, seed));
    out.push_back(check_epi_invariance(60));
    out.push_back(check_hom_monotonicity(40));
    return out;
}

} // namespace tb::selfcheck
