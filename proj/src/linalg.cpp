#include "linalg.hpp"

#include <algorithm>
#include <utility>

namespace toric::detail {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix &m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv = 1 / m[row][col];
        for (auto &x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

bool lex_less(const Row &a, const Row &b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational &x, const Rational &y) { return x < y; });
}

void sort_unique(Matrix &rows) {
    std::sort(rows.begin(), rows.end(), lex_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

Row scaled(const Row &v, const Rational &k) {
    Row r(v);
    for (auto &x : r) x *= k;
    return r;
}

void axpy(Row &y, const Rational &k, const Row &x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= k * x[i];
}

} // namespace

Rational dot(const Row &a, const Row &b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::size_t rank(Matrix rows) {
    if (rows.empty()) return 0;
    return rref(rows, rows.front().size()).size();
}

std::optional<Row> solve(const Matrix &a, const Row &b, std::size_t ncols) {
    Matrix aug;
    aug.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Row r(a[i]);
        r.push_back(b[i]);
        aug.push_back(std::move(r));
    }
    auto pivots = rref(aug, ncols + 1);
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
    Row x(ncols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][ncols];
    return x;
}

Matrix nullspace(const Matrix &a, std::size_t ncols) {
    Matrix m(a);
    auto pivots = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Row v(ncols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(primitive_row(v));
    }
    return basis;
}

Row primitive_row(const Row &v) {
    BigInt l = 1;
    for (const auto &x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    BigInt g = 0;
    std::vector<BigInt> num;
    num.reserve(v.size());
    for (const auto &x : v) {
        BigInt z = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        num.push_back(std::move(z));
    }
    if (g == 0) return v;
    Row r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(num[i] / g);
    return r;
}

ConeGenerators cone_generators(const Matrix &inequalities, std::size_t dim) {
    Matrix lin;
    for (std::size_t i = 0; i < dim; ++i) {
        Row e(dim, Rational(0));
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    Matrix rays;
    Matrix processed;

    for (const Row &a : inequalities) {
        if (std::all_of(a.begin(), a.end(), [](const Rational &x) { return x == 0; })) continue;

        auto it = std::find_if(lin.begin(), lin.end(), [&](const Row &l) { return dot(a, l) != 0; });
        if (it != lin.end()) {
            Row l0 = *it;
            if (dot(a, l0) < 0) l0 = scaled(l0, Rational(-1));
            lin.erase(it);
            Rational al0 = dot(a, l0);
            for (auto &l : lin) axpy(l, dot(a, l) / al0, l0);
            for (auto &r : rays) {
                axpy(r, dot(a, r) / al0, l0);
                r = primitive_row(r);
            }
            rays.push_back(primitive_row(l0));
            sort_unique(rays);
            processed.push_back(a);
            continue;
        }

        Matrix pos, zero, neg;
        for (auto &r : rays) {
            Rational s = dot(a, r);
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
        }
        Matrix next(pos);
        next.insert(next.end(), zero.begin(), zero.end());
        // Algebraic adjacency: the constraints tight at both rays must cut out
        // a two-dimensional face of the pointed quotient.
        const std::size_t want = dim >= lin.size() + 2 ? dim - lin.size() - 2 : 0;
        for (const auto &p : pos) {
            for (const auto &n : neg) {
                Matrix tight;
                for (const auto &c : processed)
                    if (dot(c, p) == 0 && dot(c, n) == 0) tight.push_back(c);
                if (tight.size() < want || rank(tight) != want) continue;
                Row c = scaled(n, dot(a, p));
                axpy(c, dot(a, n), p);
                next.push_back(primitive_row(c));
            }
        }
        sort_unique(next);
        rays = std::move(next);
        processed.push_back(a);
    }

    // Orthogonalize the lineality basis and project rays off it.
    Matrix ortho;
    for (const auto &l : lin) {
        Row v(l);
        for (const auto &o : ortho) axpy(v, dot(v, o) / dot(o, o), o);
        ortho.push_back(v);
    }
    for (auto &r : rays) {
        for (const auto &o : ortho) axpy(r, dot(r, o) / dot(o, o), o);
        r = primitive_row(r);
    }
    rays.erase(std::remove_if(rays.begin(), rays.end(),
                              [](const Row &r) {
                                  return std::all_of(r.begin(), r.end(), [](const Rational &x) { return x == 0; });
                              }),
               rays.end());
    sort_unique(rays);

    Matrix lineality;
    if (!lin.empty()) {
        Matrix m(lin);
        auto pivots = rref(m, dim);
        for (std::size_t i = 0; i < pivots.size(); ++i) lineality.push_back(primitive_row(m[i]));
    }
    return {std::move(rays), std::move(lineality)};
}

} // namespace toric::detail
