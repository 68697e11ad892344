#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hallforge::repfield {

/// Dense matrix over F_p, row-major, entries kept in [0, p).
struct FpMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> a;

    FpMatrix() = default;
    FpMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}
    FpMatrix(int r, int c, std::vector<int> entries, int p);

    int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    int operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static FpMatrix identity(int n);
    bool is_zero() const;
    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

int inv_mod(int a, int p);
FpMatrix mul(const FpMatrix& x, const FpMatrix& y, int p);
FpMatrix add(const FpMatrix& x, const FpMatrix& y, int p);
FpMatrix sub(const FpMatrix& x, const FpMatrix& y, int p);
FpMatrix transpose(const FpMatrix& x);

/// Reduced row-echelon form in place; returns pivot columns.
std::vector<int> rref(FpMatrix& m, int p);
int rank(FpMatrix m, int p);
/// Basis of {v : m v = 0}, one vector per row of the result.
FpMatrix nullspace(const FpMatrix& m, int p);
bool is_invertible(const FpMatrix& m, int p);
/// Inverse of a square matrix; throws std::domain_error if singular.
FpMatrix inverse(const FpMatrix& m, int p);

/// All subspaces of F_p^n, as RREF row bases, for every dimension.
/// Result is cached per (n, p) and shared.
const std::vector<FpMatrix>& all_subspaces(int n, int p);

bool is_prime(int p);

} // namespace hallforge::repfield
