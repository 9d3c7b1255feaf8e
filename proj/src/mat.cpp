#include "u22/mat.hpp"

#include <algorithm>
#include <sstream>

namespace u22 {

SqMat SqMat::identity(int n) {
    SqMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Quad::one();
    return m;
}

SqMat SqMat::unit(int n, int i, int j, const Quad& x) {
    SqMat m(n);
    m.at(i, j) = x;
    return m;
}

SqMat SqMat::scalar(int n, const Quad& x) {
    SqMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = x;
    return m;
}

SqMat SqMat::operator+(const SqMat& o) const {
    SqMat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

SqMat SqMat::operator-(const SqMat& o) const {
    SqMat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

SqMat SqMat::operator*(const SqMat& o) const {
    SqMat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Quad& x = at(i, k);
            if (x.exact_zero()) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

SqMat SqMat::operator-() const {
    SqMat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = -at(i, j);
    return r;
}

SqMat SqMat::scaled(const Quad& x) const {
    SqMat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j) * x;
    return r;
}

SqMat SqMat::shift(int k) const {
    SqMat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).shift(k);
    return r;
}

SqMat SqMat::transpose() const {
    SqMat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
    return r;
}

SqMat SqMat::conj() const {
    SqMat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).conj();
    return r;
}

SqMat SqMat::inv() const {
    // Gauss-Jordan with minimal-valuation pivoting
    SqMat a = *this, r = identity(n_);
    for (int col = 0; col < n_; ++col) {
        int piv = -1, pv = Qp::INF;
        for (int i = col; i < n_; ++i) {
            const Quad& x = a.at(i, col);
            if (!x.known_nonzero()) continue;
            int v = x.val();
            if (v < pv) { pv = v; piv = i; }
        }
        if (piv < 0) {
            // all remaining entries in this column are zeroish
            for (int i = col; i < n_; ++i)
                if (!a.at(i, col).exact_zero() && !a.at(i, col).is_zeroish())
                    throw PrecisionError("inverse: indeterminate pivot");
            throw DomainError("invalid-input", "matrix not invertible at working precision");
        }
        if (piv != col)
            for (int j = 0; j < n_; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(r.at(piv, j), r.at(col, j));
            }
        Quad pi = a.at(col, col).inv();
        for (int j = 0; j < n_; ++j) {
            a.at(col, j) = a.at(col, j) * pi;
            r.at(col, j) = r.at(col, j) * pi;
        }
        for (int i = 0; i < n_; ++i) {
            if (i == col) continue;
            Quad f = a.at(i, col);
            if (f.exact_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                r.at(i, j) -= f * r.at(col, j);
            }
        }
    }
    return r;
}

SqMat SqMat::pow(int k) const {
    SqMat base = k >= 0 ? *this : inv();
    int e = k >= 0 ? k : -k;
    SqMat r = identity(n_);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Quad SqMat::trace() const {
    Quad t = Quad::zero();
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

namespace {
// determinant of a k x k minor given by row/column index lists
Quad minor_det(const SqMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    int k = static_cast<int>(rows.size());
    if (k == 1) return m.at(rows[0], cols[0]);
    Quad acc = Quad::zero();
    std::vector<int> sub(cols.begin() + 1, cols.end());
    for (int i = 0; i < k; ++i) {
        std::vector<int> r2;
        for (int t = 0; t < k; ++t)
            if (t != i) r2.push_back(rows[t]);
        Quad term = m.at(rows[i], cols[0]) * minor_det(m, r2, sub);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}
}  // namespace

Quad SqMat::det() const {
    std::vector<int> idx(n_);
    for (int i = 0; i < n_; ++i) idx[i] = i;
    return minor_det(*this, idx, idx);
}

std::vector<Quad> SqMat::charpoly() const {
    // c[n-k] coefficient of X^(n-k) is (-1)^k * (sum of principal k x k minors)
    std::vector<Quad> c(n_ + 1, Quad::zero());
    c[n_] = Quad::one();
    for (int k = 1; k <= n_; ++k) {
        // iterate over k-subsets of {0..n-1}
        std::vector<int> sel(k);
        for (int i = 0; i < k; ++i) sel[i] = i;
        Quad sum = Quad::zero();
        while (true) {
            sum += minor_det(*this, sel, sel);
            int i = k - 1;
            while (i >= 0 && sel[i] == n_ - k + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
        }
        c[n_ - k] = (k % 2 == 1) ? -sum : sum;
    }
    return c;
}

bool SqMat::is_zeroish() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!at(i, j).is_zeroish()) return false;
    return true;
}

int SqMat::val_lb() const {
    int v = Qp::INF;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) v = std::min(v, at(i, j).val_lb());
    return v;
}

int SqMat::min_val() const {
    int v = Qp::INF;
    bool fuzzy = false;
    int fuzzy_lb = Qp::INF;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Quad& x = at(i, j);
            if (x.known_nonzero()) v = std::min(v, x.val());
            else if (!x.exact_zero()) { fuzzy = true; fuzzy_lb = std::min(fuzzy_lb, x.val_lb()); }
        }
    if (fuzzy && fuzzy_lb < v)
        throw PrecisionError("matrix valuation indeterminate at working precision");
    return v;
}

bool SqMat::val_at_least(int b) const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!at(i, j).val_at_least(b)) return false;
    return true;
}

bool eq(const SqMat& a, const SqMat& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j)
            if (!eq(a.at(i, j), b.at(i, j))) return false;
    return true;
}

std::string SqMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << "[";
        for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]\n";
    }
    return os.str();
}

std::vector<Quad> SqMat::apply(const std::vector<Quad>& v) const {
    std::vector<Quad> r(n_, Quad::zero());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

SqMat form_involution(const SqMat& gram, const SqMat& x) {
    return gram.inv() * x.conj_t() * gram;
}

SqMat ad(const SqMat& g, const SqMat& x) { return g * x * g.inv(); }

SqMat ad_bracket(const SqMat& g, const SqMat& x) { return g * x - x * g; }

}  // namespace u22
