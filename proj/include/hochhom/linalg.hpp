#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "hochhom/errors.hpp"
#include "hochhom/scalar.hpp"

namespace hochhom {

inline bool is_zero(const Rational& x)
{
    return x == 0;
}

inline Rational inverse(const Rational& x)
{
    if (x == 0)
        throw DivisionByZero();
    return 1 / x;
}

inline Scalar inverse(const Scalar& x)
{
    return x.inverse();
}

/** Sparse coordinate vector: index -> nonzero entry. */
template <typename F>
using SparseVector = std::map<std::size_t, F>;

/**
 * Sparse matrix over an exact field F, stored by rows.
 *
 * The field unit is carried along so that kernel vectors can be built for
 * runtime-model scalars (whose 1 depends on the model).
 */
template <typename F>
class SparseMatrix
{
  public:
    SparseMatrix(std::size_t rows, std::size_t cols, F unit)
        : cols_(cols), unit_(std::move(unit)), rows_(rows)
    {
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const F& unit() const { return unit_; }
    const SparseVector<F>& row(std::size_t i) const { return rows_.at(i); }

    /** Accumulate v into entry (i, j). */
    void add(std::size_t i, std::size_t j, const F& v)
    {
        if (i >= rows_.size() || j >= cols_)
            throw IndexOutOfRange("matrix entry out of range");
        if (is_zero(v))
            return;
        auto& row = rows_[i];
        auto it = row.find(j);
        if (it == row.end())
        {
            row.emplace(j, v);
            return;
        }
        it->second += v;
        if (is_zero(it->second))
            row.erase(it);
    }

    std::size_t nonzeros() const
    {
        std::size_t nnz = 0;
        for (const auto& row : rows_)
            nnz += row.size();
        return nnz;
    }

    bool is_zero_matrix() const { return nonzeros() == 0; }

    SparseMatrix transpose() const
    {
        SparseMatrix t(cols_, rows_.size(), unit_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (const auto& [j, v] : rows_[i])
                t.rows_[j].emplace(i, v);
        return t;
    }

    SparseVector<F> apply(const SparseVector<F>& x) const
    {
        SparseVector<F> y;
        for (std::size_t i = 0; i < rows_.size(); ++i)
        {
            bool any = false;
            F acc = unit_ - unit_;
            for (const auto& [j, v] : rows_[i])
            {
                auto it = x.find(j);
                if (it != x.end())
                {
                    acc += v * it->second;
                    any = true;
                }
            }
            if (any && !is_zero(acc))
                y.emplace(i, acc);
        }
        return y;
    }

    SparseMatrix multiply(const SparseMatrix& b) const
    {
        if (cols_ != b.rows())
            throw IndexOutOfRange("matrix product shape mismatch");
        SparseMatrix c(rows_.size(), b.cols(), unit_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (const auto& [k, v] : rows_[i])
                for (const auto& [j, w] : b.rows_[k])
                    c.add(i, j, v * w);
        return c;
    }

    /** Column j as a sparse vector. */
    SparseVector<F> column(std::size_t j) const
    {
        SparseVector<F> col;
        for (std::size_t i = 0; i < rows_.size(); ++i)
        {
            auto it = rows_[i].find(j);
            if (it != rows_[i].end())
                col.emplace(i, it->second);
        }
        return col;
    }

  private:
    std::size_t cols_;
    F unit_;
    std::vector<SparseVector<F>> rows_;
};

template <typename F>
struct RankKernel
{
    std::size_t rank = 0;
    /** Basis of the right kernel, one vector per free column (ascending). */
    std::vector<SparseVector<F>> kernel;
};

/**
 * Exact rank and right-kernel basis by Gauss-Jordan elimination.
 *
 * Pivots are chosen Markowitz-style: the sparsest remaining row, and in it
 * the column with the fewest occurrences. With want_kernel = false pivot
 * rows are not back-substituted, which avoids fill when only the rank is
 * needed.
 */
template <typename F>
RankKernel<F> rank_kernel(const SparseMatrix<F>& m, bool want_kernel = true)
{
    const std::size_t nrows = m.rows();
    std::vector<SparseVector<F>> rows(nrows);
    std::vector<std::set<std::size_t>> col_rows(m.cols());
    std::set<std::size_t> active;
    for (std::size_t i = 0; i < nrows; ++i)
    {
        rows[i] = m.row(i);
        for (const auto& [j, v] : rows[i])
            col_rows[j].insert(i);
        if (!rows[i].empty())
            active.insert(i);
    }

    std::vector<std::pair<std::size_t, std::size_t>> pivots;   // (row, col)
    std::vector<bool> pivot_col(m.cols(), false);
    std::vector<bool> pivoted(nrows, false);

    while (!active.empty())
    {
        std::size_t best_row = nrows;
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        for (std::size_t i : active)
        {
            if (rows[i].size() < best_size)
            {
                best_size = rows[i].size();
                best_row = i;
            }
        }
        const std::size_t pr = best_row;
        if (rows[pr].empty())
        {
            active.erase(pr);
            continue;
        }
        std::size_t pc = rows[pr].begin()->first;
        std::size_t best_count = std::numeric_limits<std::size_t>::max();
        for (const auto& [j, v] : rows[pr])
        {
            if (col_rows[j].size() < best_count)
            {
                best_count = col_rows[j].size();
                pc = j;
            }
        }

        F inv = inverse(rows[pr].at(pc));
        for (auto& [j, v] : rows[pr])
            v *= inv;

        std::vector<std::size_t> targets(col_rows[pc].begin(), col_rows[pc].end());
        for (std::size_t s : targets)
        {
            if (s == pr || (!want_kernel && pivoted[s]))
                continue;
            F f = rows[s].at(pc);
            for (const auto& [j, v] : rows[pr])
            {
                auto it = rows[s].find(j);
                if (it == rows[s].end())
                {
                    rows[s].emplace(j, -(f * v));
                    col_rows[j].insert(s);
                }
                else
                {
                    it->second -= f * v;
                    if (is_zero(it->second))
                    {
                        rows[s].erase(it);
                        col_rows[j].erase(s);
                    }
                }
            }
            if (rows[s].empty())
                active.erase(s);
        }

        pivots.emplace_back(pr, pc);
        pivot_col[pc] = true;
        pivoted[pr] = true;
        active.erase(pr);
        if (!want_kernel)
        {
            for (const auto& [j, v] : rows[pr])
                col_rows[j].erase(pr);
        }
    }

    RankKernel<F> out;
    out.rank = pivots.size();
    if (!want_kernel)
        return out;
    for (std::size_t f = 0; f < m.cols(); ++f)
    {
        if (pivot_col[f])
            continue;
        SparseVector<F> v;
        v.emplace(f, m.unit());
        for (const auto& [pr, pc] : pivots)
        {
            auto it = rows[pr].find(f);
            if (it != rows[pr].end())
                v.emplace(pc, -it->second);
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <typename F>
std::size_t rank(const SparseMatrix<F>& m)
{
    return rank_kernel(m, false).rank;
}

/**
 * Fully reduced echelon basis of a subspace, built incrementally.
 *
 * Every stored row has entry 1 at its pivot and 0 at all other pivots.
 */
template <typename F>
class EchelonBasis
{
  public:
    std::size_t size() const { return rows_.size(); }

    SparseVector<F> reduce(SparseVector<F> v) const
    {
        for (const auto& [pc, row] : rows_)
        {
            auto it = v.find(pc);
            if (it == v.end())
                continue;
            F f = it->second;
            for (const auto& [j, w] : row)
            {
                auto jt = v.find(j);
                if (jt == v.end())
                    v.emplace(j, -(f * w));
                else
                {
                    jt->second -= f * w;
                    if (is_zero(jt->second))
                        v.erase(jt);
                }
            }
        }
        return v;
    }

    bool contains(const SparseVector<F>& v) const { return reduce(v).empty(); }

    /** Adds v to the span; returns false when v was already in it. */
    bool insert(const SparseVector<F>& v)
    {
        SparseVector<F> w = reduce(v);
        if (w.empty())
            return false;
        std::size_t pc = w.begin()->first;
        F inv = inverse(w.begin()->second);
        for (auto& [j, x] : w)
            x *= inv;
        for (auto& [c, row] : rows_)
        {
            auto it = row.find(pc);
            if (it == row.end())
                continue;
            F f = it->second;
            for (const auto& [j, x] : w)
            {
                auto jt = row.find(j);
                if (jt == row.end())
                    row.emplace(j, -(f * x));
                else
                {
                    jt->second -= f * x;
                    if (is_zero(jt->second))
                        row.erase(jt);
                }
            }
        }
        rows_.emplace(pc, std::move(w));
        return true;
    }

  private:
    std::map<std::size_t, SparseVector<F>> rows_;
};

template <typename F>
std::size_t span_rank(const std::vector<SparseVector<F>>& vectors)
{
    EchelonBasis<F> basis;
    for (const auto& v : vectors)
        basis.insert(v);
    return basis.size();
}

template <typename F>
struct Subquotient
{
    std::size_t dimension = 0;
    /** Cycles reduced against the boundary basis, completing it to a cycle basis. */
    std::vector<SparseVector<F>> representatives;
};

/**
 * dim span(cycles) / span(boundaries), with representatives.
 *
 * Throws NotASubspace when some boundary is not in the span of the cycles.
 */
template <typename F>
Subquotient<F> subquotient(const std::vector<SparseVector<F>>& cycles,
                           const std::vector<SparseVector<F>>& boundaries)
{
    EchelonBasis<F> bounds;
    for (const auto& b : boundaries)
        bounds.insert(b);
    EchelonBasis<F> cyc;
    for (const auto& c : cycles)
        cyc.insert(c);
    for (const auto& b : boundaries)
        if (!cyc.contains(b))
            throw NotASubspace("boundary vector is not in the span of the cycles");

    Subquotient<F> out;
    out.dimension = cyc.size() - bounds.size();
    EchelonBasis<F> extended = bounds;
    for (const auto& c : cycles)
    {
        SparseVector<F> rep = bounds.reduce(c);
        if (extended.insert(rep))
            out.representatives.push_back(std::move(rep));
    }
    return out;
}

}   // namespace hochhom
