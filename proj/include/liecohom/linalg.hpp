#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace liecohom {

struct FpField {
    using value_type = std::uint32_t;
    std::uint32_t p = 2;

    value_type zero() const { return 0; }
    bool is_zero(value_type a) const { return a == 0; }
    value_type add(value_type a, value_type b) const { return (a + b) % p; }
    value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
    value_type mul(value_type a, value_type b) const { return mod_mul(a, b, p); }
    value_type inv(value_type a) const { return mod_inv(a, p); }
    value_type from(const Rational& q) const { return rational_mod(q, p); }
};

struct QField {
    using value_type = Rational;

    value_type zero() const { return 0; }
    bool is_zero(const value_type& a) const { return a == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const { return 1 / a; }
    value_type from(const Rational& q) const { return q; }
};

template <class Field>
using SparseVector = std::vector<std::pair<std::size_t, typename Field::value_type>>;

// Semi-echelon basis of a subspace of Field^dim. Each stored row has leading entry 1 at its
// pivot column and no entries to the left of it.
template <class Field>
class EchelonSpace {
public:
    using V = typename Field::value_type;

    EchelonSpace(Field f, std::size_t dim) : f_(f), dim_(dim), pivot_row_(dim, -1) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVector<Field>>& rows() const { return rows_; }
    std::size_t pivot(std::size_t r) const { return pivots_[r]; }

    // Reduces v against the stored rows; returns the multipliers used (one per row).
    std::vector<V> reduce(std::vector<V>& v) const {
        std::vector<V> coeffs(rows_.size(), f_.zero());
        for (std::size_t c = 0; c < dim_; ++c) {
            if (f_.is_zero(v[c]) || pivot_row_[c] < 0) continue;
            const std::size_t r = static_cast<std::size_t>(pivot_row_[c]);
            const V factor = v[c];
            coeffs[r] = factor;
            for (const auto& [col, val] : rows_[r]) v[col] = f_.sub(v[col], f_.mul(factor, val));
        }
        return coeffs;
    }

    // True when v was independent of the current span (and is now part of it).
    bool insert(std::vector<V> v) {
        reduce(v);
        std::size_t lead = dim_;
        for (std::size_t c = 0; c < dim_; ++c)
            if (!f_.is_zero(v[c])) {
                lead = c;
                break;
            }
        if (lead == dim_) return false;
        const V inv = f_.inv(v[lead]);
        SparseVector<Field> row;
        for (std::size_t c = lead; c < dim_; ++c)
            if (!f_.is_zero(v[c])) row.emplace_back(c, f_.mul(v[c], inv));
        pivot_row_[lead] = static_cast<int>(rows_.size());
        pivots_.push_back(lead);
        rows_.push_back(std::move(row));
        return true;
    }

    bool insert_sparse(const SparseVector<Field>& s) { return insert(densify(s)); }

    bool contains(std::vector<V> v) const {
        reduce(v);
        for (const auto& x : v)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    // Coordinates of v in the row basis, or nothing when v is outside the span.
    std::optional<std::vector<V>> coordinates(std::vector<V> v) const {
        auto c = reduce(v);
        for (const auto& x : v)
            if (!f_.is_zero(x)) return std::nullopt;
        return c;
    }

    std::vector<V> densify(const SparseVector<Field>& s) const {
        std::vector<V> v(dim_, f_.zero());
        for (const auto& [c, x] : s) v[c] = f_.add(v[c], x);
        return v;
    }

private:
    Field f_;
    std::size_t dim_;
    std::vector<int> pivot_row_;
    std::vector<std::size_t> pivots_;
    std::vector<SparseVector<Field>> rows_;
};

template <class Field>
std::size_t rank_of_columns(Field f, std::size_t rows, const std::vector<SparseVector<Field>>& columns) {
    EchelonSpace<Field> space(f, rows);
    for (const auto& c : columns) space.insert_sparse(c);
    return space.rank();
}

}  // namespace liecohom
