#pragma once

#include <optional>
#include <vector>

#include "blockdef/cyclotomic.hpp"
#include "blockdef/errors.hpp"
#include "blockdef/gf.hpp"

namespace blockdef {

// scalar trait hooks; overloads give each value type its context-aware zero/one
inline Fq ring_zero(const Fq& like) { return Fq::zero(like.F); }
inline Fq ring_one(const Fq& like) { return Fq::one(like.F); }
inline bool ring_is_zero(const Fq& a) { return a.is_zero(); }
inline Cyc ring_zero(const Cyc&) { return Cyc::zero(); }
inline Cyc ring_one(const Cyc&) { return Cyc::one(); }
inline bool ring_is_zero(const Cyc& a) { return a.is_zero(); }
inline Fq ring_inverse(const Fq& a) { return Fq::one(a.F) / a; }
inline Cyc ring_inverse(const Cyc& a) { return a.inverse(); }

template <class T>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<T> a;
    T proto_{}; // context carrier; keeps empty matrices usable

    Matrix() = default;
    Matrix(int r, int c, const T& fill)
        : rows(r), cols(c), a((size_t)r * c, fill), proto_(ring_zero(fill)) {}

    T& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const T& at(int r, int c) const { return a[(size_t)r * cols + c]; }

    static Matrix zeros(int r, int c, const T& proto) { return Matrix(r, c, ring_zero(proto)); }
    static Matrix identity(int n, const T& proto) {
        Matrix m = zeros(n, n, proto);
        for (int i = 0; i < n; ++i) m.at(i, i) = ring_one(proto);
        return m;
    }

    const T& proto() const { return proto_; }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a)
            if (!ring_is_zero(x)) return false;
        return true;
    }
};

template <class T>
Matrix<T> operator*(const Matrix<T>& A, const Matrix<T>& B) {
    BLOCKDEF_CHECK_INTERNAL(A.cols == B.rows, "InternalInconsistency", "matrix shape mismatch");
    Matrix<T> C = Matrix<T>::zeros(A.rows, B.cols, A.proto());
    for (int i = 0; i < A.rows; ++i) {
        for (int k = 0; k < A.cols; ++k) {
            const T& aik = A.at(i, k);
            if (ring_is_zero(aik)) continue;
            for (int j = 0; j < B.cols; ++j) {
                if (!ring_is_zero(B.at(k, j))) C.at(i, j) += aik * B.at(k, j);
            }
        }
    }
    return C;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& A, const Matrix<T>& B) {
    Matrix<T> C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
    return C;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& A, const Matrix<T>& B) {
    Matrix<T> C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
    return C;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& A) {
    Matrix<T> B = Matrix<T>::zeros(A.cols, A.rows, A.proto());
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) B.at(j, i) = A.at(i, j);
    return B;
}

template <class T>
Matrix<T> kron(const Matrix<T>& A, const Matrix<T>& B) {
    Matrix<T> C = Matrix<T>::zeros(A.rows * B.rows, A.cols * B.cols, A.proto());
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            if (ring_is_zero(A.at(i, j))) continue;
            for (int r = 0; r < B.rows; ++r)
                for (int s = 0; s < B.cols; ++s)
                    C.at(i * B.rows + r, j * B.cols + s) = A.at(i, j) * B.at(r, s);
        }
    return C;
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& A, const Matrix<T>& B) {
    Matrix<T> C = Matrix<T>::zeros(A.rows + B.rows, A.cols + B.cols, A.proto());
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j) C.at(A.rows + i, A.cols + j) = B.at(i, j);
    return C;
}

// in-place row reduction to reduced echelon form; returns pivot columns
template <class T>
std::vector<int> rref(Matrix<T>& M) {
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < M.cols && r < M.rows; ++col) {
        int sel = -1;
        for (int i = r; i < M.rows; ++i)
            if (!ring_is_zero(M.at(i, col))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        for (int j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(r, j));
        T iv = ring_inverse(M.at(r, col));
        for (int j = col; j < M.cols; ++j) M.at(r, j) = M.at(r, j) * iv;
        for (int i = 0; i < M.rows; ++i) {
            if (i != r && !ring_is_zero(M.at(i, col))) {
                T f = M.at(i, col);
                for (int j = col; j < M.cols; ++j) M.at(i, j) -= f * M.at(r, j);
            }
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

template <class T>
int rank(Matrix<T> M) {
    return (int)rref(M).size();
}

// solve A x = b for square invertible A; throws SingularSystem otherwise
template <class T>
Matrix<T> solve_right(const Matrix<T>& A, const Matrix<T>& B) {
    BLOCKDEF_CHECK_INTERNAL(A.rows == B.rows, "InternalInconsistency", "solve shape mismatch");
    Matrix<T> M = Matrix<T>::zeros(A.rows, A.cols + B.cols, A.proto());
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) M.at(i, A.cols + j) = B.at(i, j);
    }
    auto pivots = rref(M);
    // consistency: no pivot may sit in the augmented block
    int rk = 0;
    for (int p : pivots)
        if (p < A.cols) ++rk;
    if (rk != (int)pivots.size() || rk < A.cols)
        throw internal_error("SingularSystem", "linear system is singular or inconsistent");
    Matrix<T> X = Matrix<T>::zeros(A.cols, B.cols, A.proto());
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < B.cols; ++j) X.at(pivots[i], j) = M.at(i, A.cols + j);
    return X;
}

// general solve: returns one solution of A x = b if consistent
template <class T>
std::optional<Matrix<T>> try_solve(const Matrix<T>& A, const Matrix<T>& B) {
    Matrix<T> M = Matrix<T>::zeros(A.rows, A.cols + B.cols, A.proto());
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) M.at(i, A.cols + j) = B.at(i, j);
    }
    auto pivots = rref(M);
    for (int p : pivots)
        if (p >= A.cols) return std::nullopt;
    Matrix<T> X = Matrix<T>::zeros(A.cols, B.cols, A.proto());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (int j = 0; j < B.cols; ++j) X.at(pivots[i], j) = M.at((int)i, A.cols + j);
    return X;
}

// basis of the right nullspace of A, returned as columns
template <class T>
Matrix<T> nullspace(Matrix<T> A) {
    int n = A.cols;
    auto pivots = rref(A);
    std::vector<char> is_pivot(n, 0);
    for (int p : pivots) is_pivot[p] = 1;
    int free_count = n - (int)pivots.size();
    Matrix<T> N = Matrix<T>::zeros(n, free_count, A.proto());
    int idx = 0;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        N.at(col, idx) = ring_one(A.proto());
        for (size_t r = 0; r < pivots.size(); ++r) {
            T v = A.at((int)r, col);
            if (!ring_is_zero(v)) N.at(pivots[r], idx) -= v;
        }
        ++idx;
    }
    return N;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& A) {
    return solve_right(A, Matrix<T>::identity(A.rows, A.proto()));
}

template <class T>
T trace(const Matrix<T>& A) {
    T t = ring_zero(A.proto());
    for (int i = 0; i < A.rows; ++i) t += A.at(i, i);
    return t;
}

} // namespace blockdef
