#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "vlab/field.hpp"

namespace vlab {

// Dense row-major matrix over an exact field K (RationalField or PrimeField).
template <class K>
class Matrix {
public:
    using Field = K;
    using Element = typename K::Element;

    Matrix(K field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    Matrix(K field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
        : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows * cols) throw InputError("matrix entries do not match its shape");
    }

    static Matrix identity(K field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    const K& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const Element& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const Element> entries() const { return data_; }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<Element> apply(std::span<const Element> v) const {
        assert(v.size() == cols_);
        std::vector<Element> out(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    K field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

} // namespace vlab
