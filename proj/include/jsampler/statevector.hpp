// Copyright 2026 The jsampler Authors
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

/**
 * @file statevector.hpp
 * @brief Dense n-qubit statevector, gate kernels, measurement sampling and
 * single-qubit partial traces.
 *
 * Qubits are numbered 1..n from the top of the chain. Qubit 1 is the most
 * significant bit of a basis index, so for n = 3 the index of |q1 q2 q3> is
 * 4*q1 + 2*q2 + q3.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jsampler/rng.hpp"

namespace jsampler {

using Complex = std::complex<double>;
using BasisIndex = std::uint64_t;

inline constexpr int kMaxQubits = 14;
inline constexpr std::uint64_t kDefaultShots = 8000;

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<Complex, 4>;

enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);

/// Tensor product of single-qubit Paulis. Label i acts on qubit i + 1.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::vector<Pauli> labels) : labels_(std::move(labels)) {}

    /// Parses "IXYZ"-style strings. Throws ArgumentError on other characters.
    static PauliString parse(std::string_view text);
    static PauliString identity(int n) { return PauliString(std::vector<Pauli>(n, Pauli::I)); }
    /// Single Pauli `p` on qubit `q` (1-based), identity elsewhere.
    static PauliString single(int n, int q, Pauli p);
    /// Builds the string from bit masks in basis-index order (qubit 1 = MSB).
    static PauliString from_masks(int n, BasisIndex x_mask, BasisIndex z_mask);

    int size() const { return static_cast<int>(labels_.size()); }
    Pauli operator[](int i) const { return labels_[i]; }
    Pauli on_qubit(int q) const { return labels_[q - 1]; }
    const std::vector<Pauli> &labels() const { return labels_; }

    BasisIndex x_mask() const;
    BasisIndex z_mask() const;
    int y_count() const;
    bool is_identity() const;

    std::string str() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::vector<Pauli> labels_;
};

/// Pure state of an n-qubit register, 1 <= n <= kMaxQubits.
class StateVector {
  public:
    /// |0...0>. Throws SizeError when n is outside [1, kMaxQubits].
    explicit StateVector(int n);
    /// Takes ownership of amplitudes; size must be 2^n. Not renormalized.
    StateVector(int n, std::vector<Complex> amps);

    static StateVector basis(int n, BasisIndex x);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const Complex> amps() const { return amps_; }
    std::span<Complex> amps() { return amps_; }
    const Complex &operator[](BasisIndex x) const { return amps_[x]; }
    Complex &operator[](BasisIndex x) { return amps_[x]; }

    /// Bit mask of qubit q inside a basis index.
    BasisIndex mask(int q) const;

    /// u(theta, phi) = exp(-i phi Z / 2) exp(-i theta Y / 2) on qubit q.
    void apply_u(int q, double theta, double phi);
    /// Exact inverse of apply_u: exp(+i theta Y / 2) exp(+i phi Z / 2).
    void apply_u_inverse(int q, double theta, double phi);
    void apply_cz(int q1, int q2);
    void apply_pauli(const PauliString &p);
    void apply_pauli(int q, Pauli p);
    void apply_hadamard(int q);
    /// S^dagger = diag(1, -i); with apply_hadamard maps the Y basis onto Z.
    void apply_sdg(int q);
    void apply_matrix(int q, const Mat2 &m);

    double norm_squared() const;
    Complex inner(const StateVector &other) const; ///< <this|other>

  private:
    void check_qubit(int q) const;

    int n_;
    std::vector<Complex> amps_;
};

StateVector init_zero(int n);

/// Probability vector over 2^n basis states.
class ProbDist {
  public:
    /// Throws ArgumentError unless p has length 2^n, entries are nonnegative and
    /// the sum is 1 within 1e-9.
    ProbDist(int n, std::vector<double> p);

    static ProbDist uniform(int n);
    static ProbDist delta(int n, BasisIndex x);

    int num_qubits() const { return n_; }
    std::size_t size() const { return p_.size(); }
    double operator[](BasisIndex x) const { return p_[x]; }
    std::span<const double> values() const & { return p_; }
    std::span<const double> values() const && = delete;

  private:
    int n_;
    std::vector<double> p_;
};

ProbDist probabilities(const StateVector &state);

/// Empirical frequencies of `shots` draws from `dist`. Throws ArgumentError
/// when shots == 0.
ProbDist sample_counts(const ProbDist &dist, std::uint64_t shots, Seed seed);

/// 2x2 density matrix of one qubit.
struct SingleQubitRDM {
    Complex m00, m01, m10, m11;

    static SingleQubitRDM from_bloch(double rx, double ry, double rz);

    double trace() const { return (m00 + m11).real(); }
    /// Bloch vector (<X>, <Y>, <Z>).
    std::array<double, 3> bloch() const;
    /// Ascending eigenvalues from the closed-form 2x2 Hermitian solution.
    std::array<double, 2> eigenvalues() const;
};

SingleQubitRDM reduced_density_matrix(const StateVector &state, int q);

/// Rebuilds an RDM from Pauli expectations and projects it onto the physical
/// set: eigenvalues clipped to [0, 1], trace renormalized to 1.
SingleQubitRDM rdm_from_expectations(double ex, double ey, double ez);

/// Shot-based single-qubit tomography: Z, X and Y basis measurements of qubit
/// q with `shots` each, followed by rdm_from_expectations.
SingleQubitRDM tomographic_rdm(const StateVector &state, int q, std::uint64_t shots, Seed seed);

} // namespace jsampler
