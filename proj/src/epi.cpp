#include "tb/epi.hpp"

#include "tb/errors.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace tb {

const char* epi_clause_name(EpiVerdict::Clause c) noexcept {
    switch (c) {
    case EpiVerdict::Clause::C1_r: return "C1_r";
    case EpiVerdict::Clause::C1_rPlus1: return "C1_rPlus1";
    case EpiVerdict::Clause::C2_r: return "C2_r";
    case EpiVerdict::Clause::C2_rPlus1: return "C2_rPlus1";
    case EpiVerdict::Clause::TrivialTarget: return "TrivialTarget";
    }
    return "UnknownClause";
}

namespace {

void require_knot_slope(const Slope& s, const char* role) {
    if (s.is_infinity()) {
        raise(errc::infinity_input,
              std::string(role) + " slope must be finite");
    }
    if (s.den() >= 2 && is_even(s.den())) {
        raise(errc::link_slope,
              std::string(role) + " slope " + s.str() +
                  " has an even denominator: the link case is open");
    }
}

} // namespace

EpiVerdict epi_exists(const Slope& r_tilde, const Slope& r) {
    require_knot_slope(r_tilde, "source");
    require_knot_slope(r, "target");
    if (r.den() <= 1) {
        return {true, EpiVerdict::Clause::TrivialTarget, std::nullopt,
                r_tilde, r, std::nullopt};
    }
    // Translation by 2 lies in the reflection group at infinity, so the
    // target may be replaced by its residue representative in (0, 1).
    Slope target(residue_class(r), r.den());
    Slope target_inv = inverse_slope(target);
    const Slope sources[] = {r_tilde, r_tilde + Int(1)};
    const struct {
        const Slope* target;
        EpiVerdict::Clause clauses[2];
    } tests[] = {
        {&target, {EpiVerdict::Clause::C1_r, EpiVerdict::Clause::C1_rPlus1}},
        {&target_inv,
         {EpiVerdict::Clause::C2_r, EpiVerdict::Clause::C2_rPlus1}},
    };
    for (const auto& test : tests) {
        for (int i = 0; i < 2; ++i) {
            MembershipVerdict v = orbit_member(sources[i], *test.target);
            if (v.positive()) {
                return {true, test.clauses[i], std::move(v.word), sources[i],
                        *test.target, std::nullopt};
            }
        }
    }
    std::string obstruction;
    if (mod_euclid(r_tilde.den(), r.den()) != 0) {
        obstruction = "denominator " + to_string(r_tilde.den()) +
                      " is not divisible by " + to_string(r.den()) +
                      " for either of " + r_tilde.str() + ", " +
                      (r_tilde + Int(1)).str() + "; r' = " + target_inv.str();
    } else {
        obstruction = "neither " + r_tilde.str() + " nor " +
                      (r_tilde + Int(1)).str() +
                      " reduces to the target or infinity; r' = " +
                      target_inv.str();
    }
    return {false, std::nullopt, std::nullopt, r_tilde, target,
            std::move(obstruction)};
}

OrbitCondition ors_orbit_condition(const Slope& r_tilde, const Slope& r) {
    if (r.is_infinity() || r.is_integer()) {
        raise(errc::integer_slope,
              "the orbit condition needs a non-integral finite target");
    }
    const Slope sources[] = {r_tilde, r_tilde + Int(1)};
    for (const Slope& s : sources) {
        MembershipVerdict v = orbit_member(s, r);
        if (v.positive()) {
            return {true, std::move(v.word), s};
        }
    }
    return {false, std::nullopt, r_tilde};
}

namespace {

void free_reduce(std::vector<int>& word) {
    std::vector<int> out;
    out.reserve(word.size());
    for (int letter : word) {
        if (!out.empty() && out.back() == -letter) {
            out.pop_back();
        } else {
            out.push_back(letter);
        }
    }
    word = std::move(out);
}

} // namespace

std::string Presentation::str() const {
    std::string word;
    for (int letter : relator) {
        switch (letter) {
        case 1: word += 'a'; break;
        case -1: word += 'A'; break;
        case 2: word += 'b'; break;
        case -2: word += 'B'; break;
        default: word += '?'; break;
        }
    }
    return "<a,b | " + word + ">";
}

Presentation riley_presentation(const Slope& r) {
    if (r.is_infinity() || r.den() < 2) {
        raise(errc::out_of_range,
              "presentation needs a finite slope with p >= 2");
    }
    const Int& p = r.den();
    Int q = residue_class(r);
    // w = b^e1 a^e2 b^e3 ... with p-1 letters, e_i = (-1)^floor(iq/p)
    std::vector<int> w;
    for (Int i = 1; i < p; ++i) {
        int base = is_odd(i) ? 2 : 1;
        int sign = is_odd(floor_div(i * q, p)) ? -1 : 1;
        w.push_back(sign * base);
    }
    // knot: a w b^-1 w^-1; link: a w a^-1 w^-1 (rank-2 abelianization)
    int conjugated = is_odd(p) ? 2 : 1;
    std::vector<int> relator;
    relator.push_back(1);
    relator.insert(relator.end(), w.begin(), w.end());
    relator.push_back(-conjugated);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        relator.push_back(-*it);
    }
    free_reduce(relator);
    return {std::move(relator)};
}

FiniteGroupTable::FiniteGroupTable(std::string name, int order,
                                   std::vector<int> table)
    : name_(std::move(name)), order_(order), mul_(std::move(table)),
      identity_(-1), inv_(order, -1) {
    if (order_ <= 0 || mul_.size() != static_cast<std::size_t>(order_) * order_) {
        raise(errc::bad_group_table, name_ + ": bad table size");
    }
    for (int v : mul_) {
        if (v < 0 || v >= order_) {
            raise(errc::bad_group_table, name_ + ": entry out of range");
        }
    }
    for (int e = 0; e < order_; ++e) {
        bool left = true, right = true;
        for (int x = 0; x < order_; ++x) {
            left = left && mul(e, x) == x;
            right = right && mul(x, e) == x;
        }
        if (left && right) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) {
        raise(errc::bad_group_table, name_ + ": no identity");
    }
    for (int x = 0; x < order_; ++x) {
        for (int y = 0; y < order_; ++y) {
            if (mul(x, y) == identity_ && mul(y, x) == identity_) {
                inv_[x] = y;
                break;
            }
        }
        if (inv_[x] < 0) {
            raise(errc::bad_group_table, name_ + ": missing inverse");
        }
    }
    for (int x = 0; x < order_; ++x) {
        for (int y = 0; y < order_; ++y) {
            for (int z = 0; z < order_; ++z) {
                if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
                    raise(errc::bad_group_table, name_ + ": not associative");
                }
            }
        }
    }
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
    std::vector<int> mul(n * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            mul[x * n + y] = (x + y) % n;
        }
    }
    return FiniteGroupTable("Z" + std::to_string(n), n, std::move(mul));
}

FiniteGroupTable FiniteGroupTable::dihedral(int n) {
    // element 2i+s = rotation by i (s=0) or reflection at i (s=1)
    int order = 2 * n;
    auto enc = [n](int i, int s) { return 2 * ((i % n + n) % n) + s; };
    std::vector<int> mul(order * order);
    for (int i = 0; i < n; ++i) {
        for (int s = 0; s < 2; ++s) {
            for (int j = 0; j < n; ++j) {
                for (int t = 0; t < 2; ++t) {
                    int k = s == 0 ? i + j : i - j;
                    mul[enc(i, s) * order + enc(j, t)] = enc(k, s ^ t);
                }
            }
        }
    }
    return FiniteGroupTable("D" + std::to_string(n), order, std::move(mul));
}

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

FiniteGroupTable permutation_table(const std::string& name,
                                   const std::vector<std::vector<int>>& perms) {
    int order = static_cast<int>(perms.size());
    int n = static_cast<int>(perms.front().size());
    auto index_of = [&](const std::vector<int>& p) {
        auto it = std::find(perms.begin(), perms.end(), p);
        return static_cast<int>(it - perms.begin());
    };
    std::vector<int> mul(order * order);
    std::vector<int> composed(n);
    for (int x = 0; x < order; ++x) {
        for (int y = 0; y < order; ++y) {
            for (int i = 0; i < n; ++i) {
                composed[i] = perms[x][perms[y][i]];
            }
            mul[x * order + y] = index_of(composed);
        }
    }
    return FiniteGroupTable(name, order, std::move(mul));
}

bool is_even_permutation(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            inversions += p[i] > p[j];
        }
    }
    return inversions % 2 == 0;
}

} // namespace

FiniteGroupTable FiniteGroupTable::symmetric(int n) {
    return permutation_table("S" + std::to_string(n), permutations_of(n));
}

FiniteGroupTable FiniteGroupTable::alternating4() {
    std::vector<std::vector<int>> evens;
    for (const auto& p : permutations_of(4)) {
        if (is_even_permutation(p)) {
            evens.push_back(p);
        }
    }
    return permutation_table("A4", evens);
}

FiniteGroupTable FiniteGroupTable::quaternion8() {
    // 0..7 = 1, -1, i, -i, j, -j, k, -k
    auto enc = [](int axis, int sign) { return 2 * axis + (sign < 0); };
    std::vector<int> mul(64);
    auto set = [&](int x, int y, int axis, int sign) {
        mul[x * 8 + y] = enc(axis, sign);
    };
    // axis 0 is the center {1, -1}; i*j = k, j*k = i, k*i = j
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            int ax = x / 2, sx = x % 2 ? -1 : 1;
            int ay = y / 2, sy = y % 2 ? -1 : 1;
            if (ax == 0) {
                set(x, y, ay, sx * sy);
            } else if (ay == 0) {
                set(x, y, ax, sx * sy);
            } else if (ax == ay) {
                set(x, y, 0, -sx * sy); // i^2 = -1
            } else {
                // {1,2,3} = {i,j,k}: product of distinct imaginary units
                int az = 6 - ax - ay;
                bool cyclic = (ay - ax + 3) % 3 == 1; // i->j, j->k, k->i
                set(x, y, az, (cyclic ? 1 : -1) * sx * sy);
            }
        }
    }
    return FiniteGroupTable("Q8", 8, std::move(mul));
}

const std::vector<FiniteGroupTable>& FiniteGroupTable::builtins() {
    static const std::vector<FiniteGroupTable> tables = [] {
        std::vector<FiniteGroupTable> out;
        for (int n = 2; n <= 6; ++n) {
            out.push_back(cyclic(n));
        }
        for (int n = 3; n <= 6; ++n) {
            out.push_back(dihedral(n));
        }
        out.push_back(symmetric(3));
        out.push_back(symmetric(4));
        out.push_back(alternating4());
        out.push_back(quaternion8());
        return out;
    }();
    return tables;
}

long long hom_count(const Presentation& pres, const FiniteGroupTable& table) {
    const int n = table.order();
    long long count = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            // images[2 + letter] for letters {-2, -1, 1, 2}
            int images[5] = {table.inv(b), table.inv(a), 0, a, b};
            int acc = table.identity();
            for (int letter : pres.relator) {
                acc = table.mul(acc, images[2 + letter]);
            }
            count += acc == table.identity();
        }
    }
    return count;
}

ConsistencyReport epi_consistency_check(
    const Slope& r_tilde, const Slope& r,
    const std::vector<FiniteGroupTable>& tables) {
    ConsistencyReport report{epi_exists(r_tilde, r), {}, true};
    if (r_tilde.den() < 2 || r.den() < 2) {
        return report; // trivial-knot presentations are out of scope
    }
    Presentation source = riley_presentation(r_tilde);
    Presentation target = riley_presentation(r);
    for (const FiniteGroupTable& table : tables) {
        long long cs = hom_count(source, table);
        long long ct = hom_count(target, table);
        bool ok = !report.verdict.exists || ct <= cs;
        report.entries.push_back({table.name(), cs, ct, ok});
        report.ok = report.ok && ok;
    }
    return report;
}

} // namespace tb
