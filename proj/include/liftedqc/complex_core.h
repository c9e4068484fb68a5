// Copyright 2026 The liftedqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIFTEDQC_COMPLEX_CORE_H
#define LIFTEDQC_COMPLEX_CORE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace liftedqc {

using cdouble = std::complex<double>;

/// Normalization tolerance for state vectors.
inline constexpr double kNormTol = 1e-12;
/// Tolerance for unitarity, permutation and subspace checks.
inline constexpr double kUnitaryTol = 1e-10;

/// Largest row/column count any constructed matrix or state may have.
/// Exceeding it signals an instance that is too large for dense simulation.
std::size_t max_dimension();
void set_max_dimension(std::size_t dim);

/// Thrown when a dimension product would exceed `max_dimension()`.
struct DimensionOverflow : std::length_error {
    using std::length_error::length_error;
};

/// Dense complex vector.
class CVec {
   public:
    CVec() = default;
    explicit CVec(std::size_t dim);
    explicit CVec(std::vector<cdouble> amplitudes);
    CVec(std::initializer_list<cdouble> amplitudes);

    /// Computational basis vector |index> of dimension `dim`.
    static CVec basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amps_.size(); }
    cdouble &operator[](std::size_t k) { return amps_[k]; }
    const cdouble &operator[](std::size_t k) const { return amps_[k]; }
    std::span<const cdouble> amplitudes() const { return amps_; }
    std::span<cdouble> amplitudes() { return amps_; }

    double norm_squared() const;
    double norm() const;
    bool is_normalized(double tol = kNormTol) const;
    /// Returns this vector scaled to unit norm. Throws on the zero vector.
    CVec normalized() const;

    CVec &operator+=(const CVec &other);
    CVec &operator*=(cdouble s);
    friend CVec operator+(CVec a, const CVec &b) { return a += b; }
    friend CVec operator*(cdouble s, CVec v) { return v *= s; }

   private:
    std::vector<cdouble> amps_;
};

/// <a|b> (conjugate-linear in the first argument).
cdouble inner(const CVec &a, const CVec &b);

/// Dense row-major complex matrix.
class CMat {
   public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols);
    /// Row-major nested initializer, e.g. CMat{{1, 0}, {0, 1}}.
    CMat(std::initializer_list<std::initializer_list<cdouble>> rows);

    static CMat identity(std::size_t dim);
    /// Permutation matrix with column j mapped to row image[j].
    static CMat permutation(std::span<const std::uint32_t> image);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cdouble &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cdouble &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const cdouble> entries() const { return entries_; }

    CMat adjoint() const;
    CMat operator*(const CMat &other) const;
    CVec operator*(const CVec &v) const;
    CMat &operator*=(cdouble s);
    friend CMat operator*(cdouble s, CMat m) { return m *= s; }
    CMat operator+(const CMat &other) const;
    CMat operator-(const CMat &other) const;

    /// U^dagger U equals the identity entrywise within `tol`.
    bool is_unitary(double tol = kUnitaryTol) const;
    /// Exactly one entry equal to 1 per row and column, all others exactly 0.
    bool is_permutation() const;

    /// Largest entrywise modulus of (this - other). Shapes must agree.
    double max_abs_diff(const CMat &other) const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> entries_;
};

/// Tensor product; the first factor is the most significant index.
CMat kron(const CMat &a, const CMat &b);
CVec kron(const CVec &a, const CVec &b);

/// Returns u * state. Requires a square unitary `u` matching the state.
CVec apply_unitary(const CVec &state, const CMat &u);

/// |<a|b>|, insensitive to a global phase. Both inputs must be normalized.
double fidelity_up_to_phase(const CVec &a, const CVec &b);

/// Scales `m` by a unit phase so that its first entry (row-major) with
/// modulus above `tol` is real and positive. Matrices equal up to a global
/// phase canonicalize to the same matrix.
CMat canonicalize_phase(const CMat &m, double tol = 1e-9);

/// Seedable 64-bit generator (splitmix64). Per-trial streams are derived
/// from a base seed so parallel work stays reproducible.
class Rng {
   public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    /// Stream for trial `index` of a run seeded with `seed`.
    static Rng stream(std::uint64_t seed, std::uint64_t index);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

   private:
    std::uint64_t state_;
};

/// Haar-random unit vector (normalized complex Gaussian).
CVec random_state(std::size_t dim, Rng &rng);

/// Picks index k with probability weights[k] / sum(weights).
std::size_t sample_index(std::span<const double> weights, Rng &rng);

struct MeasurementResult {
    std::size_t outcome;
    CVec post_state;
    double probability;
};

/// Projective measurement with the given complete set of orthogonal
/// projectors. The post-state is P_k state renormalized.
MeasurementResult measure_projective(const CVec &state, std::span<const CMat> projectors, Rng &rng);

}  // namespace liftedqc

#endif
