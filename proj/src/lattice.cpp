#include "g1chow/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace g1chow {

SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    auto i = x.begin(), j = y.begin();
    Integer v;
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->col < j->col)) {
            if (a != 0) out.push_back({i->col, a * i->value});
            ++i;
        } else if (i == x.end() || j->col < i->col) {
            if (b != 0) out.push_back({j->col, b * j->value});
            ++j;
        } else {
            v = a * i->value + b * j->value;
            if (v != 0) out.push_back({i->col, v});
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

// Floor division for the Hermite reduction.
Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Nearest integer to a / b for b > 0.
Integer round_div(const Integer& a, const Integer& b) {
    Integer q = 2 * a + b;
    Integer d = 2 * b;
    mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
    return q;
}

}  // namespace

void LatticeEchelon::size_reduce(SparseRow& r) const {
    std::size_t pos = 1;
    while (pos < r.size()) {
        int c = r[pos].col;
        int idx = c < limit_ ? pivot_row_[c] : -1;
        if (idx < 0 || &rows_[idx] == &r) {
            ++pos;
            continue;
        }
        const SparseRow& p = rows_[idx];
        Integer q = round_div(r[pos].value, p.front().value);
        if (q != 0) r = combine(Integer(1), r, -q, p);
        pos = static_cast<std::size_t>(std::lower_bound(r.begin(), r.end(), c + 1, [](const LatticeEntry& e, int col) { return e.col < col; }) - r.begin());
    }
}

LatticeEchelon::LatticeEchelon(int ncols, int pivot_limit)
    : ncols_(ncols), limit_(pivot_limit < 0 ? ncols : pivot_limit), pivot_row_(ncols, -1) {}

void LatticeEchelon::insert(SparseRow r) {
    hermite_ = false;
    Integer g, s, t, q;
    while (!r.empty()) {
        int c = r.front().col;
        if (c >= limit_) return;
        int idx = pivot_row_[c];
        if (idx < 0) {
            if (r.front().value < 0)
                for (auto& e : r) e.value = -e.value;
            size_reduce(r);
            pivot_row_[c] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(r));
            return;
        }
        SparseRow& p = rows_[idx];
        const Integer a = r.front().value;
        const Integer b = p.front().value;
        if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
            mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            r = combine(Integer(1), r, -q, p);
            continue;
        }
        // Replace the pivot row by the gcd combination and keep eliminating.
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
        SparseRow np = combine(s, p, t, r);
        Integer bg = b / g, ag = a / g;
        SparseRow nr = combine(ag, p, -bg, r);
        size_reduce(np);
        p = std::move(np);
        r = std::move(nr);
    }
}

SparseRow LatticeEchelon::reduce(SparseRow r) const {
    Integer q;
    while (!r.empty()) {
        int c = r.front().col;
        if (c >= limit_) break;
        int idx = pivot_row_[c];
        if (idx < 0) break;
        const SparseRow& p = rows_[idx];
        if (!mpz_divisible_p(r.front().value.get_mpz_t(), p.front().value.get_mpz_t())) break;
        mpz_divexact(q.get_mpz_t(), r.front().value.get_mpz_t(), p.front().value.get_mpz_t());
        r = combine(Integer(1), r, -q, p);
    }
    return r;
}

bool LatticeEchelon::contains(const SparseRow& r) const {
    SparseRow rem = reduce(r);
    return rem.empty() || rem.front().col >= limit_;
}

void LatticeEchelon::make_hermite() {
    if (hermite_) return;
    std::vector<int> order;
    for (int c = 0; c < ncols_; ++c)
        if (pivot_row_[c] >= 0) order.push_back(c);
    for (std::size_t k = 0; k < order.size(); ++k) {
        int pc = order[k];
        const SparseRow& p = rows_[pivot_row_[pc]];
        for (std::size_t k2 = 0; k2 < k; ++k2) {
            SparseRow& r = rows_[pivot_row_[order[k2]]];
            auto it = std::lower_bound(r.begin(), r.end(), pc, [](const LatticeEntry& e, int col) { return e.col < col; });
            if (it == r.end() || it->col != pc) continue;
            Integer q = floor_div(it->value, p.front().value);
            if (q != 0) r = combine(Integer(1), r, -q, p);
        }
    }
    hermite_ = true;
}

SparseRow LatticeEchelon::normal_form(SparseRow r) const {
    if (!hermite_) throw AlgebraError("normal_form requires a Hermite basis");
    std::size_t pos = 0;
    while (pos < r.size()) {
        int c = r[pos].col;
        int idx = c < limit_ ? pivot_row_[c] : -1;
        if (idx < 0) {
            ++pos;
            continue;
        }
        const SparseRow& p = rows_[idx];
        Integer q = floor_div(r[pos].value, p.front().value);
        if (q != 0) r = combine(Integer(1), r, -q, p);
        // Entries before column c are untouched; find c again.
        pos = static_cast<std::size_t>(std::lower_bound(r.begin(), r.end(), c + 1, [](const LatticeEntry& e, int col) { return e.col < col; }) - r.begin());
    }
    return r;
}

InvariantFactors LatticeEchelon::quotient_invariants() const {
    InvariantFactors out;
    out.rank = ncols_ - rank();
    std::vector<int> unit_row(ncols_, -1);
    for (int c = 0; c < ncols_; ++c) {
        int idx = pivot_row_[c];
        if (idx >= 0 && abs(rows_[idx].front().value) == 1) unit_row[c] = idx;
    }
    std::vector<SparseRow> rest;
    for (const auto& row : rows_) {
        if (abs(row.front().value) == 1) continue;
        SparseRow r = row;
        int from = -1;
        while (true) {
            auto it = std::find_if(r.begin(), r.end(), [&](const LatticeEntry& e) { return e.col > from && unit_row[e.col] >= 0; });
            if (it == r.end()) break;
            from = it->col;
            const SparseRow& u = rows_[unit_row[from]];
            Integer f = it->value * u.front().value;  // u's pivot is +-1
            r = combine(Integer(1), r, -f, u);
        }
        rest.push_back(std::move(r));
    }
    if (rest.empty()) return out;
    std::map<int, int> colmap;
    for (const auto& r : rest)
        for (const auto& e : r) colmap.emplace(e.col, 0);
    int k = 0;
    for (auto& [c, i] : colmap) i = k++;
    std::vector<std::vector<Integer>> dense(rest.size(), std::vector<Integer>(colmap.size()));
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (const auto& e : rest[i]) dense[i][colmap[e.col]] = e.value;
    for (auto& d : smith_diagonal(std::move(dense)))
        if (d > 1) out.torsion.push_back(d);
    return out;
}

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m) {
    std::vector<Integer> diag;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t t = 0;
    Integer q;
    while (t < rows && t < cols) {
        // Pick the smallest nonzero entry of the trailing block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(m[t], m[pr]);
        for (auto& row : m) std::swap(row[t], row[pc]);
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
            for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
            for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // a smaller remainder appeared; pick again
        // Enforce divisibility of the trailing block by the pivot.
        bool divisible = true;
        for (std::size_t i = t + 1; i < rows && divisible; ++i)
            for (std::size_t j = t + 1; j < cols; ++j)
                if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                    for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    divisible = false;
                    break;
                }
        if (!divisible) continue;
        diag.push_back(abs(m[t][t]));
        ++t;
    }
    return diag;
}

std::vector<Integer> normalize_torsion(const std::vector<Integer>& orders) {
    std::vector<std::vector<Integer>> m(orders.size(), std::vector<Integer>(orders.size()));
    for (std::size_t i = 0; i < orders.size(); ++i) m[i][i] = orders[i];
    std::vector<Integer> out;
    for (auto& d : smith_diagonal(std::move(m)))
        if (d > 1) out.push_back(d);
    return out;
}

}  // namespace g1chow
