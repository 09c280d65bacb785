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
 * @file chaos_otoc.hpp
 * @brief Porter-Thomas statistics and out-of-time-order correlators of
 * sampler circuits.
 *
 * The OTOC uses V = Y on qubit 1 and W = U^dagger X_n U by default, with the
 * sampler circuit U in place of time evolution:
 *
 *   G(x) = <x| W V W V |x>,   F = (1/N) sum_x G(x),   C = 2 (1 - F).
 */

#pragma once

#include <cstdint>
#include <vector>

#include "jsampler/rng.hpp"
#include "jsampler/sampler_circuit.hpp"
#include "jsampler/statevector.hpp"

namespace jsampler {

inline constexpr int kMaxOtocExactQubits = 12;
/// max |Im G(x)| above this is flagged on the record.
inline constexpr double kImaginaryWarnLevel = 0.10;

/// Porter-Thomas Shannon entropy n - 1 + gamma_Euler, in bits.
double pt_entropy(int n);

/// Pooled histogram of scaled probabilities Np against the Porter-Thomas law.
/// Densities are per unit p, so the reference in bin i is the bin average of
/// N exp(-Np).
struct PtHistogram {
    int n = 0;
    std::vector<double> edges;     ///< bin edges in units of Np, size bins + 1
    std::vector<double> observed;  ///< observed density per unit p
    std::vector<double> reference; ///< Porter-Thomas density per unit p
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
    std::uint64_t overflow = 0; ///< samples with Np >= edges.back()
    double inverse_n = 0.0;     ///< the 1/N marker

    /// Integral of the observed density over all bins.
    double observed_mass() const;
};

/// Bins [0, max_scaled) evenly; half-open bins. Throws ArgumentError on empty
/// input or mixed register sizes.
PtHistogram pt_histogram(const std::vector<ProbDist> &dists, int bins = 20,
                         double max_scaled = 10.0);

struct LocalPauli {
    Pauli label = Pauli::I;
    int qubit = 1;
};

struct OtocOperators {
    LocalPauli v{Pauli::Y, 1};
    LocalPauli w{Pauli::X, 2};

    /// V = Y_1, W built from X_n.
    static OtocOperators chain_ends(int n) { return {{Pauli::Y, 1}, {Pauli::X, n}}; }
};

enum class TraceMode { RealPart, Abs };

/// G(x) = <x|WVWV|x>.
Complex otoc_G(const SamplerSpec &spec, BasisIndex x);
Complex otoc_G(const SamplerSpec &spec, BasisIndex x, const OtocOperators &ops);
/// <x|WVVW|x>, identically 1 without noise.
Complex wvvw_correlator(const SamplerSpec &spec, BasisIndex x);
Complex wvvw_correlator(const SamplerSpec &spec, BasisIndex x, const OtocOperators &ops);

struct OtocTrace {
    std::vector<Complex> G; ///< indexed by basis state
    double F = 0.0;
    double C = 0.0;
    double max_im_G = 0.0;
};

/// Full trace over all 2^n basis states. Throws ConsistencyError when the
/// imaginary part of F exceeds 1e-6, SizeError for n > kMaxOtocExactQubits.
OtocTrace otoc_F_exact(const SamplerSpec &spec);
OtocTrace otoc_F_exact(const SamplerSpec &spec, const OtocOperators &ops);

/// nu distinct basis states drawn uniformly. Throws ArgumentError unless
/// 1 <= nu <= 2^n.
std::vector<BasisIndex> sample_basis_states(int n, std::uint64_t nu, Seed seed);

/// (1/nu) sum Re G(x) or (1/nu) sum |G(x)| over sampled states.
double otoc_F_stochastic(const SamplerSpec &spec, std::uint64_t nu, Seed seed, TraceMode mode);
double otoc_F_stochastic(const SamplerSpec &spec, std::uint64_t nu, Seed seed, TraceMode mode,
                         const OtocOperators &ops);

/// Sampled averages of WVWV and WVVW over the same basis states. A
/// depolarizing strength eps scales each measured correlator by (1 - eps).
struct CorrelatorPair {
    Complex wvwv;
    Complex wvvw;
};

CorrelatorPair sampled_correlators(const SamplerSpec &spec, std::uint64_t nu, Seed seed,
                                   double epsilon = 0.0);
CorrelatorPair sampled_correlators(const SamplerSpec &spec, std::uint64_t nu, Seed seed,
                                   double epsilon, const OtocOperators &ops);

/// |<WVWV>| / |<WVVW>| from sampled_correlators. Throws DegenerateError when
/// the denominator is below 1e-6.
double otoc_ratio(const SamplerSpec &spec, std::uint64_t nu, Seed seed, double epsilon = 0.0);
double otoc_ratio(const CorrelatorPair &pair);

struct OtocRecord {
    SamplerSpec spec;
    std::vector<Complex> G;
    double F_exact = 0.0;
    double F_stochastic = 0.0;
    double C = 0.0;
    double wvvw = 0.0; ///< |<WVVW>| over the sampled states
    double ratio = 0.0;
    double max_im_G = 0.0;
    std::uint64_t nu = 0;

    bool imaginary_warning() const { return max_im_G > kImaginaryWarnLevel; }
};

/// Everything above for one spec; the stochastic estimate and the correlator
/// pair share the same sampled states.
OtocRecord otoc_record(const SamplerSpec &spec, std::uint64_t nu, Seed seed, TraceMode mode,
                       double epsilon = 0.0);

} // namespace jsampler
