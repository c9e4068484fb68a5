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

#include "liftedqc/complex_core.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>

namespace liftedqc {

namespace {

std::atomic<std::size_t> g_max_dimension{std::size_t{1} << 16};

std::size_t checked_product(std::size_t a, std::size_t b) {
    std::size_t limit = max_dimension();
    if (a != 0 && b > limit / a) {
        std::stringstream ss;
        ss << "dimension " << a << " x " << b << " exceeds the configured maximum " << limit;
        throw DimensionOverflow(ss.str());
    }
    return a * b;
}

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::size_t max_dimension() {
    return g_max_dimension.load(std::memory_order_relaxed);
}

void set_max_dimension(std::size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("max dimension must be positive");
    }
    g_max_dimension.store(dim, std::memory_order_relaxed);
}

// ---------------------------------------------------------------- CVec

CVec::CVec(std::size_t dim) : amps_(dim) {
}

CVec::CVec(std::vector<cdouble> amplitudes) : amps_(std::move(amplitudes)) {
}

CVec::CVec(std::initializer_list<cdouble> amplitudes) : amps_(amplitudes) {
}

CVec CVec::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw std::out_of_range("basis index out of range");
    }
    CVec v(dim);
    v[index] = 1.0;
    return v;
}

double CVec::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

double CVec::norm() const {
    return std::sqrt(norm_squared());
}

bool CVec::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

CVec CVec::normalized() const {
    double n = norm();
    if (n == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    CVec out = *this;
    out *= 1.0 / n;
    return out;
}

CVec &CVec::operator+=(const CVec &other) {
    if (other.dim() != dim()) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    for (std::size_t k = 0; k < amps_.size(); k++) {
        amps_[k] += other.amps_[k];
    }
    return *this;
}

CVec &CVec::operator*=(cdouble s) {
    for (auto &a : amps_) {
        a *= s;
    }
    return *this;
}

cdouble inner(const CVec &a, const CVec &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    cdouble total = 0;
    for (std::size_t k = 0; k < a.dim(); k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

// ---------------------------------------------------------------- CMat

CMat::CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows > max_dimension() || cols > max_dimension()) {
        throw DimensionOverflow("matrix dimension exceeds the configured maximum");
    }
    entries_.resize(rows * cols);
}

CMat::CMat(std::initializer_list<std::initializer_list<cdouble>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ragged matrix initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

CMat CMat::identity(std::size_t dim) {
    CMat m(dim, dim);
    for (std::size_t k = 0; k < dim; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

CMat CMat::permutation(std::span<const std::uint32_t> image) {
    CMat m(image.size(), image.size());
    for (std::size_t col = 0; col < image.size(); col++) {
        if (image[col] >= image.size()) {
            throw std::invalid_argument("permutation image out of range");
        }
        m(image[col], col) = 1.0;
    }
    return m;
}

CMat CMat::adjoint() const {
    CMat out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

CMat CMat::operator*(const CMat &other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("matrix product: dimension mismatch");
    }
    CMat out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t k = 0; k < cols_; k++) {
            cdouble a = (*this)(r, k);
            if (a == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < other.cols_; c++) {
                out(r, c) += a * other(k, c);
            }
        }
    }
    return out;
}

CVec CMat::operator*(const CVec &v) const {
    if (cols_ != v.dim()) {
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    }
    CVec out(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        cdouble acc = 0;
        for (std::size_t c = 0; c < cols_; c++) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

CMat &CMat::operator*=(cdouble s) {
    for (auto &e : entries_) {
        e *= s;
    }
    return *this;
}

CMat CMat::operator+(const CMat &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix sum: shape mismatch");
    }
    CMat out = *this;
    for (std::size_t k = 0; k < entries_.size(); k++) {
        out.entries_[k] += other.entries_[k];
    }
    return out;
}

CMat CMat::operator-(const CMat &other) const {
    return *this + (-1.0) * other;
}

bool CMat::is_unitary(double tol) const {
    if (!square()) {
        return false;
    }
    CMat prod = adjoint() * (*this);
    return prod.max_abs_diff(identity(rows_)) <= tol;
}

bool CMat::is_permutation() const {
    if (!square()) {
        return false;
    }
    std::vector<int> col_hits(cols_, 0);
    for (std::size_t r = 0; r < rows_; r++) {
        int row_hits = 0;
        for (std::size_t c = 0; c < cols_; c++) {
            cdouble e = (*this)(r, c);
            if (e == 1.0) {
                row_hits++;
                col_hits[c]++;
            } else if (e != 0.0) {
                return false;
            }
        }
        if (row_hits != 1) {
            return false;
        }
    }
    return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
}

double CMat::max_abs_diff(const CMat &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    double worst = 0;
    for (std::size_t k = 0; k < entries_.size(); k++) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

CMat kron(const CMat &a, const CMat &b) {
    std::size_t rows = checked_product(a.rows(), b.rows());
    std::size_t cols = checked_product(a.cols(), b.cols());
    CMat out(rows, cols);
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            cdouble s = a(ar, ac);
            if (s == 0.0) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

CVec kron(const CVec &a, const CVec &b) {
    CVec out(checked_product(a.dim(), b.dim()));
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return out;
}

CVec apply_unitary(const CVec &state, const CMat &u) {
    if (!u.square() || u.cols() != state.dim()) {
        throw std::invalid_argument("apply_unitary: dimension mismatch");
    }
    if (!u.is_unitary()) {
        throw std::invalid_argument("apply_unitary: matrix is not unitary");
    }
    return u * state;
}

double fidelity_up_to_phase(const CVec &a, const CVec &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("fidelity_up_to_phase: dimension mismatch");
    }
    return std::min(1.0, std::abs(inner(a, b)));
}

CMat canonicalize_phase(const CMat &m, double tol) {
    for (const cdouble &e : m.entries()) {
        if (std::abs(e) > tol) {
            return (std::abs(e) / e) * m;
        }
    }
    return m;
}

// ---------------------------------------------------------------- Rng

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL));
}

Rng::result_type Rng::operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

double Rng::uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

CVec random_state(std::size_t dim, Rng &rng) {
    CVec v(dim);
    for (std::size_t k = 0; k < dim; k++) {
        // Box-Muller; 1 - u keeps the logarithm finite.
        double r = std::sqrt(-2.0 * std::log(1.0 - rng.uniform()));
        double a = 2 * std::numbers::pi * rng.uniform();
        double re = r * std::cos(a);
        r = std::sqrt(-2.0 * std::log(1.0 - rng.uniform()));
        a = 2 * std::numbers::pi * rng.uniform();
        v[k] = cdouble(re, r * std::cos(a));
    }
    return v.normalized();
}

std::size_t sample_index(std::span<const double> weights, Rng &rng) {
    double total = 0;
    for (double w : weights) {
        total += w;
    }
    if (!(total > 0)) {
        throw std::domain_error("sample_index: all weights are zero");
    }
    double r = rng.uniform() * total;
    std::size_t last_nonzero = weights.size();
    double acc = 0;
    for (std::size_t k = 0; k < weights.size(); k++) {
        if (weights[k] <= 0) {
            continue;
        }
        last_nonzero = k;
        acc += weights[k];
        if (r < acc) {
            return k;
        }
    }
    // Rounding can leave r just above the accumulated total.
    return last_nonzero;
}

MeasurementResult measure_projective(const CVec &state, std::span<const CMat> projectors, Rng &rng) {
    if (projectors.empty()) {
        throw std::invalid_argument("measure_projective: empty projector set");
    }
    CMat total(state.dim(), state.dim());
    for (const auto &p : projectors) {
        if (!p.square() || p.rows() != state.dim()) {
            throw std::invalid_argument("measure_projective: projector dimension mismatch");
        }
        total = total + p;
    }
    if (total.max_abs_diff(CMat::identity(state.dim())) > kUnitaryTol) {
        throw std::invalid_argument("measure_projective: projectors do not sum to the identity");
    }

    std::vector<CVec> branches;
    std::vector<double> probs;
    branches.reserve(projectors.size());
    for (const auto &p : projectors) {
        branches.push_back(p * state);
        probs.push_back(branches.back().norm_squared());
    }
    std::size_t k = sample_index(probs, rng);
    if (probs[k] <= 0) {
        throw std::logic_error("measure_projective: sampled a zero-probability branch");
    }
    return {k, branches[k].normalized(), probs[k]};
}

}  // namespace liftedqc
