#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace hsifuse {

/// Dense order-3 tensor of reflectance values, dims (width, height, bands).
///
/// Memory layout is band-major, then row-major within a band:
///   flat(x, y, b) = b * width * height + y * width + x
/// Mode numbering is 1 = width, 2 = height, 3 = bands.
struct HyperCube {
    int width = 0;
    int height = 0;
    int bands = 0;
    std::vector<double> data;

    HyperCube() = default;
    HyperCube(int w, int h, int b, double fill = 0.0);
    HyperCube(int w, int h, int b, std::vector<double> values);

    std::size_t size() const { return data.size(); }
    int dim(int mode) const;

    std::size_t flat(int x, int y, int b) const {
        return static_cast<std::size_t>(b) * width * height +
               static_cast<std::size_t>(y) * width + x;
    }
    double& at(int x, int y, int b) { return data[flat(x, y, b)]; }
    double at(int x, int y, int b) const { return data[flat(x, y, b)]; }

    bool same_dims(const HyperCube& other) const {
        return width == other.width && height == other.height && bands == other.bands;
    }
};

/// Row-major dense matrix.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(int r, int c, double fill = 0.0);
    DenseMatrix(int r, int c, std::vector<double> values);

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    static DenseMatrix identity(int n);
};

/// Tucker factorization: core (n1 x n2 x n3) plus one factor matrix per mode.
/// Factor column counts match the core dims mode-wise and never exceed the
/// full dims (compression only).
struct TuckerFactors {
    HyperCube core;         // dims (n1, n2, n3)
    DenseMatrix w_factor;   // W x n1
    DenseMatrix h_factor;   // H x n2
    DenseMatrix s_factor;   // S x n3

    void validate() const;
};

/// Unfolds `t` along `mode` into a dims[mode] x (product of the rest) matrix.
/// Columns are ordered with the remaining modes ascending, the lower mode
/// varying fastest:
///   mode 1: col = y + height * b
///   mode 2: col = x + width  * b
///   mode 3: col = x + width  * y
DenseMatrix unfold(const HyperCube& t, int mode);

/// Exact inverse of unfold under the same column ordering.
HyperCube fold(const DenseMatrix& m, int mode, std::array<int, 3> dims);

/// Mode-n product t x_mode m: result dims equal t's with dims[mode] replaced
/// by m.rows. Equals fold(m * unfold(t, mode), mode).
HyperCube mode_product(const HyperCube& t, const DenseMatrix& m, int mode);

/// Reconstructs core x1 W x2 H x3 S.
HyperCube tucker_reconstruct(const TuckerFactors& f);

/// Truncated higher-order SVD: factors are the leading left singular vectors
/// of each mode unfolding, core = t x1 W^T x2 H^T x3 S^T. With full ranks the
/// reconstruction is exact up to roundoff.
TuckerFactors hosvd(const HyperCube& t, std::array<int, 3> ranks);

}  // namespace hsifuse
