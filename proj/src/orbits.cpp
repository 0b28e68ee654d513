#include <pcanon/orbits.hpp>

#include <array>
#include <atomic>
#include <limits>
#include <memory>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcanon::oracle {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kMaxEntries = 64;

std::uint64_t clmul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, unsigned k) {
    std::uint64_t r = 0;
    for (; b != 0; b >>= 1, a <<= 1)
        if (b & 1) r ^= a;
    for (int bit = 2 * static_cast<int>(k); bit >= static_cast<int>(k); --bit)
        if (r >> bit & 1) r ^= modulus << (bit - static_cast<int>(k));
    return r;
}

}  // namespace

MatrixSpace::MatrixSpace(FieldPtr field, std::size_t n, MatrixClass cls)
    : field_(std::move(field)), n_(n), cls_(cls) {
    const auto order = field_->order();
    if (!order || *order > 256) throw Error(ErrorCode::TooLarge, "oracle needs a field with at most 256 elements");
    if (n_ * n_ > kMaxEntries) throw Error(ErrorCode::TooLarge, "oracle supports n <= 8");
    q_ = static_cast<std::uint32_t>(*order);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const bool keep = cls_ == MatrixClass::All || (cls_ == MatrixClass::Symmetric && i <= j) ||
                              (cls_ == MatrixClass::Alternating && i < j);
            if (keep) free_.emplace_back(i, j);
        }
    size_ = 1;
    for (std::size_t k = 0; k < free_.size(); ++k) {
        if (size_ > (std::uint64_t{1} << 40) / q_) throw Error(ErrorCode::TooLarge, "matrix space too large");
        size_ *= q_;
    }
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    const std::uint32_t p = field_->characteristic();
    for (std::uint32_t a = 0; a < q_; ++a) {
        for (std::uint32_t b = 0; b < q_; ++b) {
            if (field_->kind() == FieldKind::Binary) {
                add_[a * q_ + b] = static_cast<std::uint8_t>(a ^ b);
                mul_[a * q_ + b] = static_cast<std::uint8_t>(clmul_mod(a, b, field_->modulus(), field_->degree()));
            } else {
                add_[a * q_ + b] = static_cast<std::uint8_t>((a + b) % p);
                mul_[a * q_ + b] = static_cast<std::uint8_t>((a * b) % p);
            }
        }
        neg_[a] = field_->kind() == FieldKind::Binary ? static_cast<std::uint8_t>(a)
                                                      : static_cast<std::uint8_t>((p - a) % p);
    }
}

void MatrixSpace::decode(std::uint64_t index, std::uint8_t* out) const {
    std::fill(out, out + n_ * n_, std::uint8_t{0});
    for (std::size_t k = free_.size(); k-- > 0;) {
        const auto digit = static_cast<std::uint8_t>(index % q_);
        index /= q_;
        auto [i, j] = free_[k];
        out[i * n_ + j] = digit;
        if (i != j && cls_ == MatrixClass::Symmetric) out[j * n_ + i] = digit;
        if (cls_ == MatrixClass::Alternating) out[j * n_ + i] = neg_[digit];
    }
}

std::uint64_t MatrixSpace::encode(const std::uint8_t* entries) const {
    std::uint64_t index = 0;
    for (auto [i, j] : free_) index = index * q_ + entries[i * n_ + j];
    return index;
}

Matrix MatrixSpace::to_matrix(std::uint64_t index) const {
    std::array<std::uint8_t, kMaxEntries> e{};
    decode(index, e.data());
    Matrix m(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = field_->from_index(e[i * n_ + j]);
    return m;
}

std::uint64_t MatrixSpace::from_matrix(const Matrix& m) const {
    if (m.n() != n_ || !(m.field() == *field_)) throw Error(ErrorCode::DimensionMismatch, "matrix outside the space");
    if ((cls_ == MatrixClass::Symmetric && !is_symmetric(m)) || (cls_ == MatrixClass::Alternating && !is_alternating(m)))
        throw Error(ErrorCode::KindMismatch, "matrix outside the class");
    std::array<std::uint8_t, kMaxEntries> e{};
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) e[i * n_ + j] = static_cast<std::uint8_t>(field_->index(m(i, j)));
    return encode(e.data());
}

std::vector<Generator> generators(const OrbitProblem& problem, const MatrixSpace& space) {
    std::vector<Generator> gens;
    if (problem.group == GroupKind::Trivial) return gens;
    const std::size_t n = problem.n;
    if (problem.group == GroupKind::P && problem.parabolic.n != n)
        throw Error(ErrorCode::DimensionMismatch, "parabolic does not match n");
    auto allowed = [&](std::size_t p, std::size_t q) {
        if (p == q) return false;
        if (problem.group == GroupKind::P) return problem.parabolic.block_of[p] <= problem.parabolic.block_of[q];
        return p < q;
    };
    const bool scalings = problem.group != GroupKind::U;
    const int sides = problem.relation == Relation::Equivalence ? 2 : 1;
    for (int side = 0; side < sides; ++side) {
        const bool left = side == 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (allowed(p, q))
                    for (std::uint32_t c = 1; c < space.q(); ++c)
                        gens.push_back({false, p, q, static_cast<std::uint8_t>(c), left});
        if (scalings)
            for (std::size_t p = 0; p < n; ++p)
                for (std::uint32_t s = 2; s < space.q(); ++s)  // index 1 is the unit
                    gens.push_back({true, p, p, static_cast<std::uint8_t>(s), left});
    }
    return gens;
}

namespace {

void validate(const OrbitProblem& problem, const MatrixSpace& space, std::size_t gen_count) {
    if (problem.relation == Relation::Equivalence && problem.matrix_class != MatrixClass::All)
        throw Error(ErrorCode::KindMismatch, "equivalence does not preserve symmetric or alternating matrices");
    if (space.size() >= kUnvisited) throw Error(ErrorCode::TooLarge, "matrix space exceeds 2^32 entries");
    const auto work = space.size() * std::max<std::size_t>(gen_count, 1);
    if (work > problem.budget)
        throw Error(ErrorCode::BudgetExceeded,
                    std::to_string(work) + " generator applications exceed the budget of " + std::to_string(problem.budget));
}

// Applies one generator to a decoded matrix in place.
void apply(const MatrixSpace& sp, const Generator& g, Relation rel, std::uint8_t* e) {
    const std::size_t n = sp.n();
    auto row_add = [&](std::size_t src, std::size_t dst, std::uint8_t c) {
        for (std::size_t j = 0; j < n; ++j) e[dst * n + j] = sp.add(e[dst * n + j], sp.mul(c, e[src * n + j]));
    };
    auto col_add = [&](std::size_t src, std::size_t dst, std::uint8_t c) {
        for (std::size_t i = 0; i < n; ++i) e[i * n + dst] = sp.add(e[i * n + dst], sp.mul(c, e[i * n + src]));
    };
    auto row_scale = [&](std::size_t r, std::uint8_t s) {
        for (std::size_t j = 0; j < n; ++j) e[r * n + j] = sp.mul(s, e[r * n + j]);
    };
    auto col_scale = [&](std::size_t c, std::uint8_t s) {
        for (std::size_t i = 0; i < n; ++i) e[i * n + c] = sp.mul(s, e[i * n + c]);
    };
    const bool rows = rel == Relation::Congruence || g.left;
    const bool cols = rel == Relation::Congruence || !g.left;
    if (g.scaling) {
        if (rows) row_scale(g.p, g.value);
        if (cols) col_scale(g.p, g.value);
    } else {
        if (rows) row_add(g.p, g.q, g.value);
        if (cols) col_add(g.p, g.q, g.value);
    }
}

// GF(2) equivalence on all matrices: the index is the bit-packed matrix, entry
// (i, j) at bit N-1-(i n + j). Row and column additions become XORs.
struct Gf2Kernel {
    std::size_t n, total;
    std::uint64_t row_mask;
    std::array<std::uint64_t, 8> col_mask{};

    explicit Gf2Kernel(std::size_t n_) : n(n_), total(n_ * n_), row_mask((std::uint64_t{1} << n_) - 1) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) col_mask[j] |= std::uint64_t{1} << (total - 1 - (i * n + j));
    }

    [[nodiscard]] std::uint64_t apply(const Generator& g, std::uint64_t x) const {
        if (g.left) {
            const auto src = (x >> (total - n - g.p * n)) & row_mask;
            return x ^ (src << (total - n - g.q * n));
        }
        const auto bits = x & col_mask[g.p];
        return x ^ (g.q > g.p ? bits >> (g.q - g.p) : bits << (g.p - g.q));
    }
};

bool use_gf2_kernel(const OrbitProblem& problem, const MatrixSpace& space) {
    return space.q() == 2 && problem.relation == Relation::Equivalence && problem.matrix_class == MatrixClass::All;
}

// Union-find over atomics. Linking always hangs the larger root under the
// smaller one, so every root is the least index of its set.
class ConcurrentDisjointSets {
public:
    explicit ConcurrentDisjointSets(std::size_t size) : parent_(std::make_unique<std::atomic<std::uint32_t>[]>(size)) {
        for (std::size_t i = 0; i < size; ++i) parent_[i].store(static_cast<std::uint32_t>(i), std::memory_order_relaxed);
    }

    std::uint32_t find(std::uint32_t x) {
        for (;;) {
            auto p = parent_[x].load(std::memory_order_acquire);
            if (p == x) return x;
            auto gp = parent_[p].load(std::memory_order_acquire);
            if (gp != p) parent_[x].compare_exchange_weak(p, gp, std::memory_order_acq_rel);
            x = gp;
        }
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        for (;;) {
            a = find(a);
            b = find(b);
            if (a == b) return;
            if (a > b) std::swap(a, b);
            auto expected = b;
            if (parent_[b].compare_exchange_strong(expected, a, std::memory_order_acq_rel)) return;
        }
    }

private:
    std::unique_ptr<std::atomic<std::uint32_t>[]> parent_;
};

OrbitPartition finish(std::vector<std::uint32_t> label) {
    OrbitPartition out;
    for (std::size_t x = 0; x < label.size(); ++x)
        if (label[x] == x) out.representatives.push_back(static_cast<std::uint32_t>(x));
    out.label = std::move(label);
    return out;
}

}  // namespace

OrbitPartition brute_orbits_serial(const OrbitProblem& problem) {
    const MatrixSpace space(problem.field, problem.n, problem.matrix_class);
    const auto gens = generators(problem, space);
    validate(problem, space, gens.size());
    const bool gf2 = use_gf2_kernel(problem, space);
    const Gf2Kernel kernel(problem.n);

    std::vector<std::uint32_t> label(space.size(), kUnvisited);
    std::vector<std::uint32_t> queue;
    std::array<std::uint8_t, kMaxEntries> buf{};
    for (std::uint64_t start = 0; start < space.size(); ++start) {
        if (label[start] != kUnvisited) continue;
        const auto root = static_cast<std::uint32_t>(start);
        label[start] = root;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto x = queue[head];
            for (const auto& g : gens) {
                std::uint64_t y;
                if (gf2) {
                    y = kernel.apply(g, x);
                } else {
                    space.decode(x, buf.data());
                    apply(space, g, problem.relation, buf.data());
                    y = space.encode(buf.data());
                }
                if (label[y] == kUnvisited) {
                    label[y] = root;
                    queue.push_back(static_cast<std::uint32_t>(y));
                }
            }
        }
    }
    return finish(std::move(label));
}

OrbitPartition brute_orbits_parallel(const OrbitProblem& problem, int threads) {
    const MatrixSpace space(problem.field, problem.n, problem.matrix_class);
    const auto gens = generators(problem, space);
    validate(problem, space, gens.size());
    const bool gf2 = use_gf2_kernel(problem, space);
    const Gf2Kernel kernel(problem.n);
    const auto size = static_cast<std::int64_t>(space.size());
#ifdef _OPENMP
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
#endif

    ConcurrentDisjointSets sets(space.size());
#pragma omp parallel num_threads(nthreads)
    {
        std::array<std::uint8_t, kMaxEntries> buf{};
#pragma omp for schedule(static)
        for (std::int64_t x = 0; x < size; ++x) {
            for (const auto& g : gens) {
                std::uint64_t y;
                if (gf2) {
                    y = kernel.apply(g, static_cast<std::uint64_t>(x));
                } else {
                    space.decode(static_cast<std::uint64_t>(x), buf.data());
                    apply(space, g, problem.relation, buf.data());
                    y = space.encode(buf.data());
                }
                if (y != static_cast<std::uint64_t>(x))
                    sets.unite(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
            }
        }
    }

    std::vector<std::uint32_t> label(space.size());
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (std::int64_t x = 0; x < size; ++x) label[x] = sets.find(static_cast<std::uint32_t>(x));
    return finish(std::move(label));
}

OrbitPartition brute_orbits(const OrbitProblem& problem, int threads) {
    return threads == 1 ? brute_orbits_serial(problem) : brute_orbits_parallel(problem, threads);
}

}  // namespace pcanon::oracle
