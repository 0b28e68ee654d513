#include <pcanon/verify.hpp>

#include <pcanon/census.hpp>
#include <pcanon/congr.hpp>
#include <pcanon/equiv.hpp>
#include <pcanon/orbits.hpp>
#include <pcanon/parabolic.hpp>

#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace pcanon::verify {

using oracle::GroupKind;
using oracle::MatrixClass;
using oracle::MatrixSpace;
using oracle::OrbitPartition;
using oracle::OrbitProblem;
using oracle::Relation;

namespace {

constexpr std::size_t kMaxReported = 5;

class Tally {
public:
    void fail(std::string msg) {
        if (failures_ < kMaxReported) messages_.push_back(std::move(msg));
        ++failures_;
    }
    void note(std::string msg) { notes_.push_back(std::move(msg)); }
    [[nodiscard]] bool ok() const { return failures_ == 0; }

    [[nodiscard]] std::string detail() const {
        std::string out;
        for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
        if (failures_ > 0) {
            out += fmt::format(" | {} failure(s):", failures_);
            for (const auto& m : messages_) out += " [" + m + "]";
        }
        return out;
    }

private:
    std::size_t failures_ = 0;
    std::vector<std::string> messages_;
    std::vector<std::string> notes_;
};

CheckResult timed(std::string name, double limit, const std::function<void(Tally&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    try {
        body(tally);
    } catch (const std::exception& e) {
        tally.fail(std::string("exception: ") + e.what());
    }
    CheckResult r;
    r.name = std::move(name);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.limit_seconds = limit;
    r.passed = tally.ok() && r.seconds <= limit;
    r.detail = tally.detail();
    if (r.seconds > limit) r.detail += fmt::format(" | over the {:.0f} s allowance", limit);
    return r;
}

OrbitProblem problem(const FieldPtr& field, std::size_t n, GroupKind g, Relation rel, MatrixClass cls) {
    OrbitProblem pb;
    pb.field = field;
    pb.n = n;
    pb.group = g;
    pb.relation = rel;
    pb.matrix_class = cls;
    return pb;
}

std::string label_of(const OrbitProblem& pb) { return describe(pb); }

// Every orbit of the problem must hold exactly one matrix of the canonical
// shape, and `canon` must send every member to it. Returns the orbit count.
std::size_t orbit_uniqueness(const OrbitProblem& pb, int threads, const std::function<bool(const Matrix&)>& shape,
                             const std::function<Matrix(const Matrix&, bool&)>& canon, Tally& t) {
    const auto part = oracle::brute_orbits(pb, threads);
    const MatrixSpace space(pb.field, pb.n, pb.matrix_class);
    const auto size = space.size();
    std::vector<std::uint32_t> shapes_in(size, 0);
    std::vector<std::uint64_t> shape_at(size, 0);
    std::vector<std::uint64_t> canon_at(size, 0);
    const std::string where = label_of(pb);
    for (std::uint64_t x = 0; x < size; ++x) {
        const Matrix m = space.to_matrix(x);
        if (shape(m)) {
            ++shapes_in[part.label[x]];
            shape_at[part.label[x]] = x;
        }
        bool witness_ok = true;
        const Matrix y = canon(m, witness_ok);
        if (!witness_ok) t.fail(fmt::format("{}: witness fails on #{}", where, x));
        try {
            canon_at[x] = space.from_matrix(y);
        } catch (const Error&) {
            t.fail(fmt::format("{}: canonical form of #{} leaves the class", where, x));
            canon_at[x] = size;
        }
    }
    for (auto r : part.representatives)
        if (shapes_in[r] != 1) t.fail(fmt::format("{}: orbit of #{} holds {} canonical shapes", where, r, shapes_in[r]));
    for (std::uint64_t x = 0; x < size; ++x)
        if (canon_at[x] != shape_at[part.label[x]])
            t.fail(fmt::format("{}: canonical form of #{} is not the shape in its orbit", where, x));
    return part.orbit_count();
}

bool sub_perm(const Matrix& m) { return is_sub_permutation(m); }
bool sub_perm_01(const Matrix& m) {
    const auto c = classify(m);
    return c.sub_permutation && c.zero_one;
}

}  // namespace

Suite parse_suite(std::string_view name) {
    if (name == "all") return Suite::All;
    if (name == "equiv") return Suite::Equiv;
    if (name == "congr") return Suite::Congr;
    if (name == "parabolic") return Suite::Parabolic;
    if (name == "census") return Suite::Census;
    if (name == "field") return Suite::Field;
    throw Error(ErrorCode::Parse, "unknown suite '" + std::string(name) + "'");
}

CheckResult check_equivalence_oracle(const Options& opt) {
    return timed("equivalence canonical forms vs oracle (GF(2) n=3,4; GF(3) n=3)", 120, [&](Tally& t) {
        const std::vector<std::pair<FieldPtr, std::size_t>> cases{
            {Field::prime(2), 3}, {Field::prime(2), 4}, {Field::prime(3), 3}};
        for (const auto& [field, n] : cases) {
            for (auto g : {GroupKind::B, GroupKind::U}) {
                const auto pb = problem(field, n, g, Relation::Equivalence, MatrixClass::All);
                const bool b = g == GroupKind::B;
                const auto orbits = orbit_uniqueness(
                    pb, opt.threads, b ? sub_perm_01 : sub_perm,
                    [&](const Matrix& m, bool& ok) {
                        auto r = b ? b_equiv_canonical(m) : u_equiv_canonical(m);
                        ok = witness_holds(m, r);
                        return r.canonical;
                    },
                    t);
                t.note(fmt::format("{} {} n={}: {} orbits", field->name(), b ? "B" : "U", n, orbits));
            }
        }
    });
}

CheckResult check_u_congruence_oracle(const Options& opt) {
    return timed("U-congruence canonical forms vs oracle (GF(3) n=3)", 30, [&](Tally& t) {
        const auto f = Field::prime(3);
        for (auto cls : {MatrixClass::Symmetric, MatrixClass::Alternating}) {
            const auto pb = problem(f, 3, GroupKind::U, Relation::Congruence, cls);
            const bool sym = cls == MatrixClass::Symmetric;
            const auto orbits = orbit_uniqueness(
                pb, opt.threads, sub_perm,
                [&](const Matrix& m, bool& ok) {
                    auto r = sym ? u_congr_canonical_sym(m) : u_congr_canonical_alt(m);
                    ok = witness_holds(m, r);
                    return r.canonical;
                },
                t);
            t.note(fmt::format("{}: {} orbits", sym ? "symmetric" : "alternating", orbits));
        }
    });
}

CheckResult check_alternating_b_congruence(const Options& opt) {
    return timed("alternating B-congruence vs oracle and C(n) (GF(2),GF(3),GF(5), n<=4)", 120, [&](Tally& t) {
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const auto f = Field::prime(p);
            std::string counts;
            for (std::size_t n = 1; n <= 4; ++n) {
                const auto pb = problem(f, n, GroupKind::B, Relation::Congruence, MatrixClass::Alternating);
                const auto orbits = orbit_uniqueness(
                    pb, opt.threads, [](const Matrix& m) { return classify(m).one_minus_one; },
                    [](const Matrix& m, bool& ok) {
                        auto r = b_congr_canonical_alt(m);
                        ok = witness_holds(m, r);
                        return r.canonical;
                    },
                    t);
                const auto expected = count_alt_orbits(static_cast<unsigned>(n));
                if (BigInt(orbits) != expected)
                    t.fail(fmt::format("GF({}) n={}: {} orbits, C(n) = {}", p, n, orbits, expected.str()));
                counts += (counts.empty() ? "" : ",") + std::to_string(orbits);
            }
            t.note(fmt::format("GF({}) orbits n=1..4: {}", p, counts));
        }
    });
}

CheckResult check_char2_congruence(const Options& opt) {
    return timed("characteristic 2 symmetric congruence vs oracle (GF(2) n<=4; GF(4) n=3)", 300, [&](Tally& t) {
        std::vector<std::pair<FieldPtr, std::size_t>> cases;
        for (std::size_t n = 1; n <= 4; ++n) cases.emplace_back(Field::binary(1), n);
        cases.emplace_back(Field::binary(2), 3);
        for (const auto& [field, n] : cases) {
            for (auto g : {GroupKind::U, GroupKind::B}) {
                const bool b = g == GroupKind::B;
                const auto pb = problem(field, n, g, Relation::Congruence, MatrixClass::Symmetric);
                const auto orbits = orbit_uniqueness(
                    pb, opt.threads,
                    [b](const Matrix& m) {
                        const auto c = classify(m);
                        return c.specialized_pseudo_permutation && (!b || c.zero_one);
                    },
                    [b](const Matrix& m, bool& ok) {
                        auto r = b ? b_congr_canonical_sym_char2(m) : u_congr_canonical_sym_char2(m);
                        ok = witness_holds(m, r);
                        return r.canonical;
                    },
                    t);
                const auto listed = enumerate_canforms(static_cast<unsigned>(n),
                                                       b ? CanformKind::SpecializedPseudoPermZeroOne
                                                         : CanformKind::SpecializedPseudoPerm,
                                                       field, false);
                if (BigInt(orbits) != listed.count)
                    t.fail(fmt::format("{} {} n={}: {} orbits but {} canonical shapes", field->name(), b ? "B" : "U", n,
                                       orbits, listed.count.str()));
                t.note(fmt::format("{} {} n={}: {} orbits", field->name(), b ? "B" : "U", n, orbits));
            }
        }

        const auto f2 = Field::binary(1);
        const auto x = Matrix::from_ints(f2, 3, {0, 0, 1, 0, 1, 0, 1, 0, 1});
        const auto x_target = Matrix::from_ints(f2, 3, {0, 0, 1, 0, 1, 0, 1, 0, 0});
        const auto y = Matrix::from_ints(f2, 4, {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1});
        const auto y_target = Matrix::from_ints(f2, 4, {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 0});
        for (auto [in, want, tag] : {std::tuple{x, x_target, "X"}, std::tuple{y, y_target, "Y"}}) {
            const auto u = u_congr_canonical_sym_char2(in);
            const auto b = b_congr_canonical_sym_char2(in);
            if (!(u.canonical == want) || !witness_holds(in, u)) t.fail(std::string(tag) + ": U-canonical form differs");
            if (!(b.canonical == want) || !witness_holds(in, b)) t.fail(std::string(tag) + ": B-canonical form differs");
        }
        t.note("X and Y reach their targets");
    });
}

CheckResult check_tower_symmetric(const Options& opt) {
    return timed("symmetric B-congruence over TOWER(3), random group actions", 60, [&](Tally& t) {
        const auto f = Field::tower(3);
        std::mt19937_64 rng(opt.seed);
        std::size_t max_level = 0;
        for (std::size_t it = 0; it < opt.random_cases; ++it) {
            const std::size_t n = 1 + it % 5;
            // Sparse inputs reach the low-rank shapes more often.
            const bool sparse = it % 3 == 0;
            Matrix x(f, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    Elem v = (sparse && rng() % 2) ? f->zero() : f->random(rng, 0);
                    x(i, j) = v;
                    x(j, i) = v;
                }
            Matrix b(f, n);
            for (std::size_t i = 0; i < n; ++i) {
                b(i, i) = f->random_nonzero(rng, 1);
                for (std::size_t j = i + 1; j < n; ++j) b(i, j) = f->random(rng, 1);
            }
            const Matrix moved = b.transpose() * x * b;
            const auto rx = b_congr_canonical_sym(x);
            const auto rm = b_congr_canonical_sym(moved);
            if (!(rx.canonical == rm.canonical)) t.fail(fmt::format("case {}: canonical form not invariant", it));
            const auto c = classify(rx.canonical);
            if (!(c.symmetric && c.sub_permutation && c.zero_one))
                t.fail(fmt::format("case {}: result is not a symmetric sub-permutation (0,1)-matrix", it));
            if (!witness_holds(x, rx) || !witness_holds(moved, rm)) t.fail(fmt::format("case {}: witness fails", it));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) max_level = std::max<std::size_t>(max_level, rm.witness.u(i, j).level);
        }
        t.note(fmt::format("{} cases, seed {}, witness level up to {}", opt.random_cases, opt.seed, max_level));
    });
}

CheckResult check_parabolic_equivalence(const Options& opt) {
    return timed("P-equivalence criteria (a)-(d) and inclusion-exclusion (GF(2) n=4, all parabolics)", 600,
                 [&](Tally& t) {
        const auto f = Field::prime(2);
        const std::size_t n = 4;
        const MatrixSpace space(f, n, MatrixClass::All);
        std::vector<Matrix> all;
        all.reserve(space.size());
        std::vector<Matrix> canon;
        canon.reserve(space.size());
        for (std::uint64_t x = 0; x < space.size(); ++x) {
            all.push_back(space.to_matrix(x));
            canon.push_back(b_equiv_canonical(all.back()).canonical);
        }
        std::size_t sub_perms = 0;
        std::string counts;
        for (const auto& p : all_parabolics(n)) {
            auto pb = problem(f, n, GroupKind::P, Relation::Equivalence, MatrixClass::All);
            pb.parabolic = p;
            const auto part = oracle::brute_orbits(pb, opt.threads);
            const auto tag = p.to_string();

            // (b) and (d) are constant on orbits; gather the canonical forms per orbit for (c).
            std::map<std::uint32_t, InvariantTable> rank_of, cross_of;
            std::map<std::uint32_t, std::set<std::uint64_t>> forms_of;
            for (auto r : part.representatives) {
                rank_of.emplace(r, block_rank_table(all[r], p));
                cross_of.emplace(r, cross_counts(canon[r], p));
            }
            for (std::uint64_t x = 0; x < space.size(); ++x) {
                const auto r = part.label[x];
                if (!(block_rank_table(all[x], p) == rank_of.at(r)))
                    t.fail(fmt::format("P={}: block ranks vary inside the orbit of #{}", tag, r));
                if (!(cross_counts(canon[x], p) == cross_of.at(r)))
                    t.fail(fmt::format("P={}: cross counts vary inside the orbit of #{}", tag, r));
                forms_of[r].insert(space.from_matrix(canon[x]));
            }
            for (const auto& [r, forms] : forms_of)
                for (auto y : forms)
                    if (!w_equivalent_exhaustive(all[y], canon[r], p))
                        t.fail(fmt::format("P={}: canonical forms in the orbit of #{} are not W-equivalent", tag, r));

            // Distinct orbits: every criterion must separate them.
            const auto& reps = part.representatives;
            for (std::size_t a = 0; a < reps.size(); ++a)
                for (std::size_t b = a + 1; b < reps.size(); ++b) {
                    const auto ra = reps[a], rb = reps[b];
                    const auto rep = p_equivalent_report(all[ra], all[rb], p);
                    const bool c = w_equivalent_exhaustive(canon[ra], canon[rb], p);
                    const bool d = w_equivalent(canon[ra], canon[rb], p);
                    if (rep.related || rep.cross_counts_agree || c || d)
                        t.fail(fmt::format("P={}: orbits of #{} and #{} not separated", tag, ra, rb));
                }

            sub_perms = 0;
            for (std::uint64_t x = 0; x < space.size(); ++x) {
                if (!sub_perm_01(all[x])) continue;
                ++sub_perms;
                if (!inclusion_exclusion_holds(all[x], p))
                    t.fail(fmt::format("P={}: inclusion-exclusion fails on #{}", tag, x));
            }
            counts += fmt::format("{}{}:{}", counts.empty() ? "" : " ", tag, part.orbit_count());
        }
        t.note("orbits per composition " + counts);
        t.note(fmt::format("inclusion-exclusion on {} sub-permutation (0,1)-matrices", sub_perms));
    });
}

CheckResult check_parabolic_congruence(const Options& opt) {
    return timed("alternating P-congruence = P-equivalence = condition (a) (GF(2),GF(3) n=4)", 600, [&](Tally& t) {
        const std::size_t n = 4;
        for (std::uint32_t q : {2u, 3u}) {
            const auto f = Field::prime(q);
            const MatrixSpace space(f, n, MatrixClass::Alternating);
            std::vector<Matrix> all;
            std::vector<Matrix> canon;
            for (std::uint64_t x = 0; x < space.size(); ++x) {
                all.push_back(space.to_matrix(x));
                canon.push_back(b_congr_canonical_alt(all.back()).canonical);
            }
            std::optional<MatrixSpace> full;
            if (q == 2) full.emplace(f, n, MatrixClass::All);

            std::string counts;
            for (const auto& p : all_parabolics(n)) {
                const auto tag = fmt::format("GF({}) P={}", q, p.to_string());
                auto pb = problem(f, n, GroupKind::P, Relation::Congruence, MatrixClass::Alternating);
                pb.parabolic = p;
                const auto part = oracle::brute_orbits(pb, opt.threads);

                // Each decider's key must be constant on orbits and separate them.
                using Key = std::vector<std::int64_t>;
                auto condition_a_key = [&](const Matrix& y) {
                    Key k;
                    const auto red = reduced_permutation(y, p);
                    IntTable cross(p.r(), std::vector<std::int64_t>(p.r(), 0));
                    for (auto [i, j] : red.transpositions) {
                        auto a = p.block_of[i], b = p.block_of[j];
                        ++cross[std::min(a, b)][std::max(a, b)];
                    }
                    for (const auto& row : cross) k.insert(k.end(), row.begin(), row.end());
                    const auto cc = cross_counts(y, p);
                    for (std::size_t i = 1; i <= p.r(); ++i) k.push_back(cc.at(i, i));
                    return k;
                };
                auto rank_key = [&](const Matrix& m) {
                    Key k;
                    for (const auto& row : block_rank_table(m, p).values) k.insert(k.end(), row.begin(), row.end());
                    return k;
                };
                std::map<Key, std::uint32_t> rank_owner, a_owner;
                std::map<std::uint32_t, std::uint64_t> equiv_owner;
                std::optional<OrbitPartition> equiv;
                if (full) {
                    auto pe = problem(f, n, GroupKind::P, Relation::Equivalence, MatrixClass::All);
                    pe.parabolic = p;
                    equiv = oracle::brute_orbits(pe, opt.threads);
                }
                for (std::uint64_t x = 0; x < space.size(); ++x) {
                    const auto r = part.label[x];
                    auto it1 = rank_owner.emplace(rank_key(all[x]), r).first;
                    if (it1->second != r) t.fail(fmt::format("{}: block ranks disagree with the orbits at #{}", tag, x));
                    auto it2 = a_owner.emplace(condition_a_key(canon[x]), r).first;
                    if (it2->second != r) t.fail(fmt::format("{}: condition (a) disagrees with the orbits at #{}", tag, x));
                    if (equiv) {
                        const auto e = equiv->label[full->from_matrix(all[x])];
                        auto it3 = equiv_owner.emplace(r, e).first;
                        if (it3->second != e) t.fail(fmt::format("{}: P-equivalence splits the orbit of #{}", tag, r));
                    }
                }
                if (rank_owner.size() != part.orbit_count() || a_owner.size() != part.orbit_count())
                    t.fail(fmt::format("{}: a decider merges distinct orbits", tag));
                if (equiv) {
                    std::set<std::uint64_t> images;
                    for (const auto& [r, e] : equiv_owner) images.insert(e);
                    if (images.size() != part.orbit_count())
                        t.fail(fmt::format("{}: P-equivalence merges distinct congruence orbits", tag));
                }

                // Pairs of representatives through the library deciders, with the
                // exhaustive conjugation search alongside the counting rule.
                const auto& reps = part.representatives;
                for (std::size_t a = 0; a < reps.size(); ++a)
                    for (std::size_t b = a; b < reps.size(); ++b) {
                        const auto& c = all[reps[a]];
                        const auto& d = all[reps[b]];
                        const auto rep = p_congruent_report(c, d, p, FormKind::Alternating);
                        const bool same = a == b;
                        if (rep.related != same || rep.condition_a != same)
                            t.fail(fmt::format("{}: deciders wrong on #{} vs #{}", tag, reps[a], reps[b]));
                        if (w_conjugate_exhaustive(rep.reduced_c, rep.reduced_d, p) != rep.conjugate)
                            t.fail(fmt::format("{}: conjugation rule differs from search on #{} vs #{}", tag, reps[a],
                                               reps[b]));
                        if (rank(c) == n && rank(d) == n && rep.conjugate != same)
                            t.fail(fmt::format("{}: invertible #{} vs #{} not decided by conjugacy alone", tag,
                                               reps[a], reps[b]));
                    }
                // Invertible members against their own representative.
                for (std::uint64_t x = 0; x < space.size(); ++x) {
                    if (rank(all[x]) != n) continue;
                    const auto r = part.label[x];
                    if (!w_conjugate(reduced_permutation(canon[x], p), reduced_permutation(canon[r], p), p))
                        t.fail(fmt::format("{}: invertible #{} not conjugate to its representative", tag, x));
                }
                counts += fmt::format("{}{}:{}", counts.empty() ? "" : " ", p.to_string(), part.orbit_count());
            }
            t.note(fmt::format("GF({}) orbits {}", q, counts));
        }
    });
}

CheckResult check_recurrences(const Options&) {
    return timed("orbit-count recurrences vs enumeration (n<=8)", 10, [&](Tally& t) {
        const std::vector<int> c_expected{1, 1, 2, 4, 10, 26, 76, 232, 764};
        const std::vector<int> d_expected{1, 2, 5, 14, 43, 142, 499, 1850, 7193};
        const auto f = Field::prime(3);
        for (unsigned n = 0; n <= kMaxEnumerateN; ++n) {
            const auto c = count_alt_orbits(n);
            const auto d = count_sym_orbits(n);
            if (c != c_expected[n]) t.fail(fmt::format("C({}) = {}", n, c.str()));
            if (d != d_expected[n]) t.fail(fmt::format("D({}) = {}", n, d.str()));
            const auto alt = enumerate_canforms(n, CanformKind::AltOneMinusOne, f);
            const auto sym = enumerate_canforms(n, CanformKind::SymZeroOneSubperm, f);
            if (alt.count != c || alt.representatives.size() != c)
                t.fail(fmt::format("n={}: {} (1,-1)-matrices, C(n) = {}", n, alt.count.str(), c.str()));
            if (sym.count != d || sym.representatives.size() != d)
                t.fail(fmt::format("n={}: {} symmetric sub-permutation (0,1)-matrices, D(n) = {}", n, sym.count.str(),
                                   d.str()));
            // The listed matrices must be distinct and of the right kind.
            std::set<std::string> seen;
            for (const auto& m : alt.representatives) {
                if (n > 0 && !classify(m).one_minus_one) t.fail(fmt::format("n={}: listed matrix is not (1,-1)", n));
                seen.insert(format_matrix(m));
            }
            if (seen.size() != alt.representatives.size()) t.fail(fmt::format("n={}: repeated (1,-1)-matrix", n));
            seen.clear();
            for (const auto& m : sym.representatives) {
                const auto k = classify(m);
                if (!(k.symmetric && k.sub_permutation && k.zero_one))
                    t.fail(fmt::format("n={}: listed matrix is not a symmetric sub-permutation (0,1)-matrix", n));
                seen.insert(format_matrix(m));
            }
            if (seen.size() != sym.representatives.size()) t.fail(fmt::format("n={}: repeated symmetric matrix", n));
        }
        t.note("C(0..8) = 1,1,2,4,10,26,76,232,764; D(0..8) = 1,2,5,14,43,142,499,1850,7193");
    });
}

namespace {

void field_properties(const FieldPtr& f, unsigned max_level, std::size_t cases, std::mt19937_64& rng, Tally& t) {
    const Field& F = *f;
    const auto name = F.name();
    auto draw = [&]() { return F.random(rng, max_level == 0 ? 0 : static_cast<unsigned>(rng() % (max_level + 1))); };
    for (std::size_t it = 0; it < cases; ++it) {
        const Elem a = draw(), b = draw(), c = draw();
        auto check = [&](bool cond, const char* what) {
            if (!cond) t.fail(fmt::format("{} case {}: {} ({}, {}, {})", name, it, what, F.format(a), F.format(b), F.format(c)));
        };
        check(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)), "additive associativity");
        check(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)), "multiplicative associativity");
        check(F.add(a, b) == F.add(b, a), "additive commutativity");
        check(F.mul(a, b) == F.mul(b, a), "multiplicative commutativity");
        check(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)), "distributivity");
        check(F.add(a, F.zero()) == a && F.mul(a, F.one()) == a, "identities");
        check(F.is_zero(F.add(a, F.neg(a))), "additive inverse");
        check(F.sub(a, b) == F.add(a, F.neg(b)), "subtraction");
        if (!F.is_zero(a)) {
            check(F.is_one(F.mul(a, F.inv(a))), "multiplicative inverse");
            check(F.mul(F.div(b, a), a) == b, "division");
        }
        check(F.parse_elem(F.format(a)) == a, "text round trip");
        if (F.kind() == FieldKind::Tower) {
            check(F.normalize(a) == a, "normalize idempotent");
            check(F.normalize(F.lift(a, max_level + 1)) == a, "normalize after lift");
        } else {
            check(F.from_index(F.index(a)) == a, "index round trip");
        }
        // Square roots: perfect and square-closed fields always have one; for
        // prime fields the answer must match an exhaustive search.
        if (F.kind() == FieldKind::Prime) {
            bool exists = false;
            for (std::uint64_t v = 0; v < F.characteristic() && !exists; ++v) {
                const auto e = F.from_index(v);
                exists = F.mul(e, e) == a;
            }
            check(F.is_square(a) == exists, "is_square agrees with search");
            if (exists) {
                const auto s = F.sqrt(a);
                check(F.mul(s, s) == a, "sqrt squares back");
            } else {
                bool threw = false;
                try {
                    (void)F.sqrt(a);
                } catch (const Error& e) {
                    threw = e.code() == ErrorCode::NonSquare;
                }
                check(threw, "sqrt of a non-square throws NonSquare");
            }
        } else {
            const auto s = F.sqrt(a);
            check(F.mul(s, s) == a, "sqrt squares back");
        }
        // Lagrange: a^(|K|-1) = 1 in the smallest finite field holding a.
        if (!F.is_zero(a)) {
            std::uint64_t order = 0;
            if (F.kind() == FieldKind::Tower) {
                order = 1;
                for (std::uint32_t k = 0; k < (1u << a.level); ++k) order *= F.characteristic();
            } else {
                order = *F.order();
            }
            check(F.is_one(F.pow(a, order - 1)), "multiplicative order divides |K|-1");
        }
    }
}

}  // namespace

CheckResult check_fields(const Options& opt) {
    return timed("field axioms and square roots (GF(2,3,5,7), GF(4), GF(8), TOWER(3) levels <= 3)", 10, [&](Tally& t) {
        std::mt19937_64 rng(opt.seed);
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) field_properties(Field::prime(p), 0, opt.random_cases, rng, t);
        for (unsigned k : {2u, 3u}) field_properties(Field::binary(k), 0, opt.random_cases, rng, t);
        field_properties(Field::tower(3), 3, opt.random_cases, rng, t);
        t.note(fmt::format("7 fields, {} cases each, seed {}", opt.random_cases, opt.seed));
    });
}

std::vector<CheckResult> run_suite(Suite suite, const Options& opt) {
    std::vector<CheckResult> out;
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Equiv) out.push_back(check_equivalence_oracle(opt));
    if (all || suite == Suite::Congr) {
        out.push_back(check_u_congruence_oracle(opt));
        out.push_back(check_alternating_b_congruence(opt));
        out.push_back(check_char2_congruence(opt));
        out.push_back(check_tower_symmetric(opt));
    }
    if (all || suite == Suite::Parabolic) {
        out.push_back(check_parabolic_equivalence(opt));
        out.push_back(check_parabolic_congruence(opt));
    }
    if (all || suite == Suite::Census) out.push_back(check_recurrences(opt));
    if (all || suite == Suite::Field) out.push_back(check_fields(opt));
    return out;
}

std::string format_result(const CheckResult& r) {
    return fmt::format("{}  {}  ({:.2f} s / {:.0f} s)  {}", r.passed ? "PASS" : "FAIL", r.name, r.seconds,
                       r.limit_seconds, r.detail);
}

}  // namespace pcanon::verify
