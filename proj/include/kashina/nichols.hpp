#pragma once

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kashina/errors.hpp"
#include "kashina/matrix.hpp"
#include "kashina/yd.hpp"

namespace kashina {

/// Size ceiling for symmetrizer matrices (d^n), overridable through the
/// NICHOLS_MAX_MATRIX environment variable.
inline std::size_t nichols_matrix_ceiling() {
    if (const char* env = std::getenv("NICHOLS_MAX_MATRIX")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 4096;
}

/// Quantum symmetrizers of a braided vector space, computed bottom-up:
///   step(0) = id,            step(n) = id + c_n (step(n-1) (x) id),
///   omega(1) = id,           omega(n) = (omega(n-1) (x) id) step(n-1),
/// where c_i acts on tensor slots (i, i+1). Lower degrees are memoized.
class SymmetrizerTower {
public:
    explicit SymmetrizerTower(Braiding b, std::size_t ceiling = nichols_matrix_ceiling())
        : b_(std::move(b)), d_(b_.dimV), ceiling_(ceiling) {}

    std::size_t dimV() const { return d_; }

    /// d^n, guarded by the ceiling.
    std::size_t space_dim(std::size_t n) const {
        std::size_t s = 1;
        for (std::size_t k = 0; k < n; ++k) {
            s *= d_;
            if (s > ceiling_)
                throw ResourceError("symmetrizer degree " + std::to_string(n) +
                                    " needs matrices of size " + std::to_string(s) +
                                    " > ceiling NICHOLS_MAX_MATRIX=" + std::to_string(ceiling_));
        }
        return s;
    }

    /// c acting on slots (i, i+1) of n tensor slots (1-based i, i < n).
    Matrix c_at(std::size_t i, std::size_t n) const {
        Matrix m = Matrix::identity(1);
        std::size_t k = 1;
        while (k + 1 < i + 1) {
            m = kron(m, Matrix::identity(d_));
            ++k;
        }
        m = kron(m, b_.c);
        k += 2;
        while (k <= n) {
            m = kron(m, Matrix::identity(d_));
            ++k;
        }
        return m;
    }

    /// Omega_{n,1} in End(V^(x)(n+1)).
    const Matrix& step(std::size_t n) {
        if (n < step_.size()) return step_[n];
        space_dim(n + 1);
        if (step_.empty()) step_.push_back(Matrix::identity(d_));
        for (std::size_t k = step_.size(); k <= n; ++k) {
            Matrix lifted = kron(step_[k - 1], Matrix::identity(d_));
            Matrix ck = c_at(k, k + 1);
            step_.push_back(Matrix::identity(lifted.rows()) + ck * lifted);
        }
        return step_[n];
    }

    /// Omega_n in End(V^(x)n), n >= 1.
    const Matrix& omega(std::size_t n) {
        if (n == 0) throw ShapeError("omega: degree must be >= 1");
        if (n - 1 < omega_.size()) return omega_[n - 1];
        space_dim(n);
        if (omega_.empty()) omega_.push_back(Matrix::identity(d_));
        for (std::size_t k = omega_.size() + 1; k <= n; ++k) {
            Matrix lifted = kron(omega_[k - 2], Matrix::identity(d_));
            omega_.push_back(lifted * step(k - 1));
        }
        return omega_[n - 1];
    }

    const Braiding& braid() const { return b_; }

private:
    Braiding b_;
    std::size_t d_;
    std::size_t ceiling_;
    std::vector<Matrix> omega_; // omega_[k] = Omega_{k+1}
    std::vector<Matrix> step_;  // step_[k] = Omega_{k,1}
};

inline Matrix quantum_symmetrizer(const Braiding& b, std::size_t n,
                                  std::size_t ceiling = nichols_matrix_ceiling()) {
    SymmetrizerTower t(b, ceiling);
    return t.omega(n);
}

/// Independent route for Omega_{n,1}: the explicit sum
/// id + c_n + c_n c_{n-1} + ... + c_n ... c_1. Used to cross-check the
/// recursion.
inline Matrix symmetrizer_step_sum_form(const Braiding& b, std::size_t n,
                                        std::size_t ceiling = nichols_matrix_ceiling()) {
    SymmetrizerTower t(b, ceiling);
    std::size_t dim = t.space_dim(n + 1);
    Matrix sum = Matrix::identity(dim);
    Matrix prod = Matrix::identity(dim);
    for (std::size_t k = n; k >= 1; --k) {
        prod = prod * t.c_at(k, n + 1);
        sum = sum + prod;
    }
    return sum;
}

/// Per-degree symmetrizer ranks. `terminated` means a zero rank appeared at
/// degree `ranks.size()+1`; by the graded structure all higher degrees then
/// vanish and the total dimension is 1 + sum of the ranks. Otherwise the
/// report flags that the cutoff was exceeded and claims nothing further.
struct GradedDimReport {
    std::string braiding_id;
    std::size_t dimV = 0;
    int n_max = 0;
    std::vector<std::size_t> ranks; // ranks[k] = rank Omega_{k+1}, nonzero entries only
    bool terminated = false;

    std::optional<std::size_t> total() const {
        if (!terminated) return std::nullopt;
        std::size_t s = 1;
        for (auto r : ranks) s += r;
        return s;
    }
};

inline GradedDimReport graded_dims(const Braiding& b, int n_max = 8,
                                   std::size_t ceiling = nichols_matrix_ceiling()) {
    if (n_max < 1) throw ShapeError("graded_dims: n_max must be >= 1");
    GradedDimReport rep;
    rep.dimV = b.dimV;
    rep.n_max = n_max;
    SymmetrizerTower t(b, ceiling);
    for (int n = 1; n <= n_max; ++n) {
        std::size_t r = t.omega(static_cast<std::size_t>(n)).rank();
        if (r == 0) {
            rep.terminated = true;
            break;
        }
        rep.ranks.push_back(r);
    }
    return rep;
}

/// A formal combination of degree-n basis words; words are digit strings
/// over {0..dimV-1}, leftmost letter most significant.
using TensorWord = std::vector<std::size_t>;
using TensorElement = std::vector<std::pair<TensorWord, Scalar>>;

inline std::size_t word_index(const TensorWord& w, std::size_t d) {
    std::size_t idx = 0;
    for (auto digit : w) {
        if (digit >= d) throw ShapeError("word digit out of range");
        idx = idx * d + digit;
    }
    return idx;
}

/// True iff Omega_n annihilates the element. Every word must have length n.
inline bool relation_in_kernel(const Braiding& b, const TensorElement& element, std::size_t n,
                               std::size_t ceiling = nichols_matrix_ceiling()) {
    SymmetrizerTower t(b, ceiling);
    std::size_t dim = t.space_dim(n);
    std::vector<Scalar> vec(dim);
    for (const auto& [w, c] : element) {
        if (w.size() != n)
            throw ShapeError("relation_in_kernel: word of length " + std::to_string(w.size()) +
                             " in a degree-" + std::to_string(n) + " element");
        vec[word_index(w, b.dimV)] += c;
    }
    std::vector<Scalar> img = t.omega(n).apply(vec);
    for (const auto& s : img)
        if (!s.is_zero()) return false;
    return true;
}

/// Evaluate Omega_n on the alternating word v (x) w (x) v (x) w ... of
/// length n (dim V = 2 required). Returns the eigenvalue k when the image is
/// exactly k times the word with k != 0.
inline std::optional<Scalar> eigen_witness(const Braiding& b, std::size_t n,
                                           std::size_t ceiling = nichols_matrix_ceiling()) {
    if (b.dimV != 2) throw ShapeError("eigen_witness: dim V = 2 required");
    if (n < 1) throw ShapeError("eigen_witness: n >= 1 required");
    SymmetrizerTower t(b, ceiling);
    std::size_t dim = t.space_dim(n);
    TensorWord w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = k & 1;
    std::size_t idx = word_index(w, 2);
    std::vector<Scalar> vec(dim);
    vec[idx] = Scalar::one();
    std::vector<Scalar> img = t.omega(n).apply(vec);
    for (std::size_t r = 0; r < dim; ++r)
        if (r != idx && !img[r].is_zero()) return std::nullopt;
    if (img[idx].is_zero()) return std::nullopt;
    return img[idx];
}

} // namespace kashina
