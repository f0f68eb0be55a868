/**
 * Dense GF(2) linear algebra.
 *
 * Cycle classes, boundary matrices, and all subspace computations in this
 * library live over the two-element field.  Vectors are machine-word-packed
 * bit rows; dimensions stay below a few hundred for the parameter ranges of
 * interest, so dense rows beat any sparse scheme.  Addition is bitwise XOR,
 * which is also the symmetric difference of edge-supports.
 *
 * Beyond rank / membership / intersection-dimension, this header provides an
 * incremental echelon form (for greedy independence tests), a Zassenhaus
 * intersection basis, and a span-completion helper; these are shared by the
 * adapted-basis search and the inductive splitting of representations.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace starph {

/**
 * A fixed-dimension bit vector over GF(2).
 */
class Gf2Vector
{
    private:
        std::size_t dim_;
        std::vector<std::uint64_t> words_;

    public:
        Gf2Vector() : dim_(0) {}

        /** Zero vector of the given dimension. */
        explicit Gf2Vector(std::size_t dim)
            : dim_(dim), words_((dim + 63) / 64, 0)
        {
        }

        /** Vector of the given dimension with ones at the listed positions. */
        Gf2Vector(std::size_t dim, const std::vector<std::size_t>& support)
            : Gf2Vector(dim)
        {
            for (auto i : support)
                this->set(i, true);
        }

        std::size_t dim() const { return this->dim_; }

        bool get(std::size_t i) const
        {
            return (this->words_[i / 64] >> (i % 64)) & 1u;
        }

        void set(std::size_t i, bool value)
        {
            const std::uint64_t mask = std::uint64_t(1) << (i % 64);
            if (value)
                this->words_[i / 64] |= mask;
            else
                this->words_[i / 64] &= ~mask;
        }

        bool is_zero() const
        {
            for (auto w : this->words_)
                if (w != 0)
                    return false;
            return true;
        }

        /** Number of ones. */
        std::size_t weight() const
        {
            std::size_t n = 0;
            for (auto w : this->words_)
                n += static_cast<std::size_t>(std::popcount(w));
            return n;
        }

        /** Index of the lowest set bit, or dim() if zero. */
        std::size_t lowest_bit() const
        {
            for (std::size_t j = 0; j < this->words_.size(); ++j)
                if (this->words_[j] != 0)
                    return 64 * j +
                           static_cast<std::size_t>(std::countr_zero(this->words_[j]));
            return this->dim_;
        }

        /** Sorted list of positions holding a one. */
        std::vector<std::size_t> support() const
        {
            std::vector<std::size_t> out;
            for (std::size_t i = 0; i < this->dim_; ++i)
                if (this->get(i))
                    out.push_back(i);
            return out;
        }

        Gf2Vector& operator^=(const Gf2Vector& other)
        {
            if (other.dim_ != this->dim_)
                throw std::invalid_argument("Gf2Vector dimension mismatch");
            for (std::size_t j = 0; j < this->words_.size(); ++j)
                this->words_[j] ^= other.words_[j];
            return *this;
        }

        friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b)
        {
            a ^= b;
            return a;
        }

        friend bool operator==(const Gf2Vector& a, const Gf2Vector& b)
        {
            return a.dim_ == b.dim_ && a.words_ == b.words_;
        }

        friend bool operator<(const Gf2Vector& a, const Gf2Vector& b)
        {
            if (a.dim_ != b.dim_)
                return a.dim_ < b.dim_;
            return a.words_ < b.words_;
        }
};

/**
 * A row-major bit matrix over GF(2).
 */
class Gf2Matrix
{
    private:
        std::size_t cols_;
        std::vector<Gf2Vector> rows_;

    public:
        /** Matrix of zeros with the given shape. */
        Gf2Matrix(std::size_t nrows, std::size_t ncols)
            : cols_(ncols), rows_(nrows, Gf2Vector(ncols))
        {
        }

        /** Matrix whose rows are the given vectors (shared dimension). */
        explicit Gf2Matrix(const std::vector<Gf2Vector>& rows, std::size_t ncols)
            : cols_(ncols), rows_(rows)
        {
            for (const auto& r : this->rows_)
                if (r.dim() != this->cols_)
                    throw std::invalid_argument("Gf2Matrix row dimension mismatch");
        }

        std::size_t nrows() const { return this->rows_.size(); }
        std::size_t ncols() const { return this->cols_; }

        Gf2Vector& row(std::size_t i) { return this->rows_[i]; }
        const Gf2Vector& row(std::size_t i) const { return this->rows_[i]; }

        bool get(std::size_t i, std::size_t j) const
        {
            return this->rows_[i].get(j);
        }

        void set(std::size_t i, std::size_t j, bool value)
        {
            this->rows_[i].set(j, value);
        }
};

/**
 * Incrementally maintained reduced row-echelon form of a set of vectors.
 *
 * Supports the two queries the rest of the library needs: "does this vector
 * enlarge the span?" and "reduce this vector modulo the span".
 */
class Gf2Echelon
{
    private:
        std::size_t dim_;
        // Rows in echelon form, each paired with its pivot position;
        // kept sorted by pivot.
        std::vector<std::pair<std::size_t, Gf2Vector> > rows_;

    public:
        explicit Gf2Echelon(std::size_t dim) : dim_(dim) {}

        std::size_t dim() const { return this->dim_; }
        std::size_t rank() const { return this->rows_.size(); }

        /** Residual of `v` after elimination against the stored rows. */
        Gf2Vector reduce(Gf2Vector v) const
        {
            if (v.dim() != this->dim_)
                throw std::invalid_argument("Gf2Echelon dimension mismatch");
            for (const auto& [pivot, row] : this->rows_)
                if (v.get(pivot))
                    v ^= row;
            return v;
        }

        /** Whether `v` lies in the current span. */
        bool contains(const Gf2Vector& v) const
        {
            return this->reduce(v).is_zero();
        }

        /**
         * Insert `v` into the span.
         *
         * @returns True if the rank grew (i.e. `v` was independent of the
         *          previously inserted vectors), false otherwise.
         */
        bool insert(const Gf2Vector& v)
        {
            Gf2Vector res = this->reduce(v);
            if (res.is_zero())
                return false;
            const std::size_t pivot = res.lowest_bit();
            // Back-substitute to keep the form fully reduced.
            for (auto& [p, row] : this->rows_)
                if (row.get(pivot))
                    row ^= res;
            auto pos = std::lower_bound(
                this->rows_.begin(), this->rows_.end(), pivot,
                [](const auto& entry, std::size_t key){ return entry.first < key; }
            );
            this->rows_.insert(pos, std::make_pair(pivot, res));
            return true;
        }
};

/**
 * Rank of a matrix over GF(2) by Gaussian elimination.
 *
 * @param m Input matrix (not modified).
 * @returns rank(m).
 */
inline std::size_t gf2_rank(const Gf2Matrix& m)
{
    Gf2Echelon ech(m.ncols());
    for (std::size_t i = 0; i < m.nrows(); ++i)
        ech.insert(m.row(i));
    return ech.rank();
}

/** Rank of a list of vectors of shared dimension over GF(2). */
inline std::size_t gf2_rank(const std::vector<Gf2Vector>& rows, std::size_t dim)
{
    Gf2Echelon ech(dim);
    for (const auto& r : rows)
        ech.insert(r);
    return ech.rank();
}

/**
 * Express `v` in the span of `basis`, if possible.
 *
 * @param basis Spanning vectors (need not be independent); shared dimension.
 * @param v     Target vector of the same dimension.
 * @returns Coefficients c (one bit per basis vector, as bytes 0/1) with
 *          XOR_{c_i=1} basis[i] = v, or std::nullopt if v is outside the span.
 * @throws std::invalid_argument on dimension mismatch.
 */
inline std::optional<std::vector<unsigned char> >
gf2_solve_membership(const std::vector<Gf2Vector>& basis, const Gf2Vector& v)
{
    const std::size_t n = basis.size();
    for (const auto& b : basis)
        if (b.dim() != v.dim())
            throw std::invalid_argument("gf2_solve_membership dimension mismatch");

    // Eliminate while tracking which combination of input vectors produced
    // each echelon row.
    std::vector<std::pair<std::size_t, std::pair<Gf2Vector, Gf2Vector> > > rows;
    for (std::size_t i = 0; i < n; ++i)
    {
        Gf2Vector vec = basis[i];
        Gf2Vector combo(n);
        combo.set(i, true);
        for (const auto& [pivot, rc] : rows)
            if (vec.get(pivot))
            {
                vec ^= rc.first;
                combo ^= rc.second;
            }
        if (!vec.is_zero())
            rows.emplace_back(vec.lowest_bit(), std::make_pair(vec, combo));
    }

    Gf2Vector res = v;
    Gf2Vector combo(n);
    for (const auto& [pivot, rc] : rows)
        if (res.get(pivot))
        {
            res ^= rc.first;
            combo ^= rc.second;
        }
    if (!res.is_zero())
        return std::nullopt;
    std::vector<unsigned char> out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = combo.get(i) ? 1 : 0;
    return out;
}

/**
 * Dimension of span(a) ∩ span(b).
 *
 * Computed as rank(a) + rank(b) − rank(a ∪ b).
 *
 * @throws std::invalid_argument on dimension mismatch.
 */
inline std::size_t subspace_intersection_dim(const std::vector<Gf2Vector>& a,
                                             const std::vector<Gf2Vector>& b,
                                             std::size_t dim)
{
    Gf2Echelon ea(dim), eb(dim), eab(dim);
    for (const auto& x : a)
    {
        if (x.dim() != dim)
            throw std::invalid_argument("subspace_intersection_dim mismatch");
        ea.insert(x);
        eab.insert(x);
    }
    for (const auto& x : b)
    {
        if (x.dim() != dim)
            throw std::invalid_argument("subspace_intersection_dim mismatch");
        eb.insert(x);
        eab.insert(x);
    }
    return ea.rank() + eb.rank() - eab.rank();
}

/**
 * Basis of span(a) ∩ span(b) by the Zassenhaus construction.
 *
 * Rows [x|x] for x in a and [y|0] for y in b are brought to echelon form;
 * the right halves of rows whose left half vanished span the intersection.
 */
inline std::vector<Gf2Vector> subspace_intersection_basis(
    const std::vector<Gf2Vector>& a, const std::vector<Gf2Vector>& b,
    std::size_t dim)
{
    std::vector<std::pair<std::size_t, Gf2Vector> > rows;   // pivot in [0,2*dim)
    std::vector<Gf2Vector> inter;
    auto insert = [&](Gf2Vector v) {
        for (const auto& [pivot, row] : rows)
            if (v.get(pivot))
                v ^= row;
        if (v.is_zero())
            return;
        const std::size_t pivot = v.lowest_bit();
        if (pivot >= dim)
        {
            // Left half vanished: the right half is an intersection vector.
            Gf2Vector w(dim);
            for (std::size_t i = dim; i < 2 * dim; ++i)
                if (v.get(i))
                    w.set(i - dim, true);
            inter.push_back(w);
        }
        rows.emplace_back(pivot, v);
        std::sort(rows.begin(), rows.end(),
                  [](const auto& p, const auto& q){ return p.first < q.first; });
    };
    for (const auto& x : a)
    {
        Gf2Vector v(2 * dim);
        for (std::size_t i = 0; i < dim; ++i)
            if (x.get(i))
            {
                v.set(i, true);
                v.set(i + dim, true);
            }
        insert(v);
    }
    for (const auto& y : b)
    {
        Gf2Vector v(2 * dim);
        for (std::size_t i = 0; i < dim; ++i)
            if (y.get(i))
                v.set(i, true);
        insert(v);
    }
    return inter;
}

/**
 * Vectors from `target` that extend span(`base`) to span(`base` ∪ `target`).
 *
 * Used to complete a subspace basis inside a larger space: if span(base) ⊆
 * span(target), the returned vectors together with `base` span `target`.
 */
inline std::vector<Gf2Vector> complete_span(const std::vector<Gf2Vector>& base,
                                            const std::vector<Gf2Vector>& target,
                                            std::size_t dim)
{
    Gf2Echelon ech(dim);
    for (const auto& x : base)
        ech.insert(x);
    std::vector<Gf2Vector> added;
    for (const auto& y : target)
        if (ech.insert(y))
            added.push_back(y);
    return added;
}

}   // namespace starph
