#include <pcanon/matrix.hpp>

#include <fstream>
#include <sstream>

namespace pcanon {

Matrix::Matrix(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n), a_(n * n) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field().one();
    return m;
}

Matrix Matrix::from_ints(FieldPtr field, std::size_t n, const std::vector<std::int64_t>& values) {
    if (values.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "expected n*n values");
    Matrix m(std::move(field), n);
    for (std::size_t k = 0; k < values.size(); ++k) m.a_[k] = m.field().from_int(values[k]);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_space(*this, rhs);
    Matrix out(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const auto& x = (*this)(i, k);
            if (field_->is_zero(x)) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (rhs.nonzero(k, j)) out(i, j) = field_->add(out(i, j), field_->mul(x, rhs(k, j)));
        }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(field_, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = field_->neg(a_[k]);
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return n_ == rhs.n_ && *field_ == *rhs.field_ && a_ == rhs.a_;
}

void Matrix::add_row_multiple(std::size_t src, std::size_t dst, const Elem& c) {
    if (field_->is_zero(c)) return;
    for (std::size_t j = 0; j < n_; ++j)
        if (nonzero(src, j)) (*this)(dst, j) = field_->add((*this)(dst, j), field_->mul(c, (*this)(src, j)));
}

void Matrix::add_col_multiple(std::size_t src, std::size_t dst, const Elem& c) {
    if (field_->is_zero(c)) return;
    for (std::size_t i = 0; i < n_; ++i)
        if (nonzero(i, src)) (*this)(i, dst) = field_->add((*this)(i, dst), field_->mul(c, (*this)(i, src)));
}

void Matrix::scale_row(std::size_t i, const Elem& s) {
    for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = field_->mul(s, (*this)(i, j));
}

void Matrix::scale_col(std::size_t j, const Elem& s) {
    for (std::size_t i = 0; i < n_; ++i) (*this)(i, j) = field_->mul(s, (*this)(i, j));
}

bool Matrix::is_zero() const {
    for (const auto& e : a_)
        if (!field_->is_zero(e)) return false;
    return true;
}

bool Matrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (nonzero(i, j)) return false;
    return true;
}

bool Matrix::is_invertible_upper() const {
    if (!is_upper_triangular()) return false;
    for (std::size_t i = 0; i < n_; ++i)
        if (!nonzero(i, i)) return false;
    return true;
}

bool Matrix::is_unitriangular() const {
    if (!is_upper_triangular()) return false;
    for (std::size_t i = 0; i < n_; ++i)
        if (!field_->is_one((*this)(i, i))) return false;
    return true;
}

bool Matrix::is_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i != j && nonzero(i, j)) return false;
    return true;
}

void require_same_space(const Matrix& a, const Matrix& b) {
    if (a.n() != b.n())
        throw Error(ErrorCode::DimensionMismatch, std::to_string(a.n()) + " vs " + std::to_string(b.n()));
    if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
}

std::size_t top_left_rank(const Matrix& a, std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) return 0;
    const Field& f = a.field();
    std::vector<std::vector<Elem>> m(rows, std::vector<Elem>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && f.is_zero(m[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const Elem inv = f.inv(m[r][col]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (f.is_zero(m[i][col])) continue;
            const Elem c = f.mul(m[i][col], inv);
            for (std::size_t j = col; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(c, m[r][j]));
        }
        ++r;
    }
    return r;
}

std::size_t rank(const Matrix& a) { return top_left_rank(a, a.n(), a.n()); }

bool is_symmetric(const Matrix& a) {
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(a(i, j) == a(j, i))) return false;
    return true;
}

bool is_alternating(const Matrix& a) {
    const Field& f = a.field();
    for (std::size_t i = 0; i < a.n(); ++i) {
        if (a.nonzero(i, i)) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!(a(i, j) == f.neg(a(j, i)))) return false;
    }
    return true;
}

bool is_sub_permutation(const Matrix& a) {
    const std::size_t n = a.n();
    std::vector<int> row(n, 0), col(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.nonzero(i, j) && (++row[i] > 1 || ++col[j] > 1)) return false;
    return true;
}

namespace {

bool pseudo_permutation_shape(const Matrix& a) {
    if (!is_symmetric(a)) return false;
    const std::size_t n = a.n();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < n; ++i)
            if (a.nonzero(i, j)) rows.push_back(i);
        if (rows.size() > 2) return false;
        // A doubly occupied column j holds X_ij (i < j) and X_jj.
        if (rows.size() == 2 && !(rows[0] < j && rows[1] == j)) return false;
    }
    return true;
}

}  // namespace

PairStructure pair_structure(const Matrix& a) {
    if (!pseudo_permutation_shape(a)) throw Error(ErrorCode::NotPseudoPermutation, "pair structure");
    const std::size_t n = a.n();
    PairStructure ps;
    for (std::size_t j = 0; j < n; ++j) {
        if (!a.nonzero(j, j)) continue;
        std::size_t partner = n;
        for (std::size_t i = 0; i < j; ++i)
            if (a.nonzero(i, j)) partner = i;
        if (partner < n) ps.pairs.emplace_back(partner, j);
        else ps.indices.push_back(j);
    }
    for (auto [i, j] : ps.pairs) {
        bool bad = false;
        for (auto [k, l] : ps.pairs) bad = bad || (i < k && l < j);
        for (auto s : ps.indices) bad = bad || (i < s && s < j);
        if (bad) ps.problematic.emplace_back(i, j);
    }
    return ps;
}

Classification classify(const Matrix& a) {
    const Field& f = a.field();
    Classification c;
    c.symmetric = is_symmetric(a);
    c.alternating = is_alternating(a);
    c.sub_permutation = is_sub_permutation(a);
    c.zero_one = true;
    bool upper_ones = true;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) {
            const auto& e = a(i, j);
            if (!f.is_zero(e) && !f.is_one(e)) {
                c.zero_one = false;
                if (i < j) upper_ones = false;
            }
        }
    c.one_minus_one = c.alternating && c.sub_permutation && upper_ones;
    c.pseudo_permutation = pseudo_permutation_shape(a);
    c.specialized_pseudo_permutation = c.pseudo_permutation && pair_structure(a).problematic.empty();
    return c;
}

std::vector<std::size_t> SubPermCouple::support(const Field& field) const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!field.is_zero(f[i])) s.push_back(i);
    return s;
}

SubPermCouple couple(const Matrix& a) {
    if (!is_sub_permutation(a)) throw Error(ErrorCode::NotSubPermutation, "couple");
    const std::size_t n = a.n();
    SubPermCouple c{std::vector<Elem>(n), std::vector<std::size_t>(n, n)};
    std::vector<bool> row_used(n, false);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (a.nonzero(i, j)) {
                c.f[j] = a(i, j);
                c.sigma[j] = i;
                row_used[i] = true;
            }
    if (is_symmetric(a) || is_alternating(a)) {
        for (std::size_t j = 0; j < n; ++j)
            if (c.sigma[j] == n) c.sigma[j] = j;
        return c;
    }
    std::size_t next_row = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (c.sigma[j] != n) continue;
        while (row_used[next_row]) ++next_row;
        c.sigma[j] = next_row++;
    }
    return c;
}

Matrix from_couple(FieldPtr field, const SubPermCouple& c) {
    Matrix m(std::move(field), c.f.size());
    for (std::size_t j = 0; j < c.f.size(); ++j) m(c.sigma[j], j) = c.f[j];
    return m;
}

Matrix permutation_matrix(FieldPtr field, const std::vector<std::size_t>& perm) {
    Matrix m(std::move(field), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = m.field().one();
    return m;
}

// ---------------------------------------------------------------- text format

Matrix read_matrix(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    auto fail = [](const std::string& why) { return Error(ErrorCode::Parse, "matrix file: " + why); };
    if (lines.size() < 2) throw fail("missing header");
    std::istringstream h1(lines[0]), h2(lines[1]);
    std::string kw, spec, kw2;
    long long n = -1;
    if (!(h1 >> kw >> spec) || kw != "field") throw fail("expected 'field <spec>'");
    if (!(h2 >> kw2 >> n) || kw2 != "n" || n < 0) throw fail("expected 'n <n>'");
    auto field = Field::parse(spec);
    const auto dim = static_cast<std::size_t>(n);
    if (lines.size() != dim + 2) throw fail("expected " + std::to_string(dim) + " rows");
    Matrix m(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::istringstream row(lines[i + 2]);
        std::string tok;
        std::size_t j = 0;
        for (; row >> tok; ++j) {
            if (j >= dim) throw fail("row " + std::to_string(i + 1) + " too long");
            m(i, j) = field->parse_elem(tok);
        }
        if (j != dim) throw fail("row " + std::to_string(i + 1) + " too short");
    }
    return m;
}

Matrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_matrix(in);
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    return read_matrix(in);
}

std::string format_matrix(const Matrix& a) {
    std::string s = "field " + a.field().name() + "\nn " + std::to_string(a.n()) + "\n";
    for (std::size_t i = 0; i < a.n(); ++i) {
        for (std::size_t j = 0; j < a.n(); ++j) {
            if (j) s += ' ';
            s += a.field().format(a(i, j));
        }
        s += '\n';
    }
    return s;
}

}  // namespace pcanon
