#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lcinv/invariants.hpp"

namespace lcinv {

inline constexpr std::uint32_t default_dense_max_n = 10;

/// Dense operator on the full n-qubit register: a 2^n x 2^n complex matrix,
/// row-major. Basis index bit i encodes the state of qubit i+1.
class DenseOperator {
public:
  DenseOperator() = default;
  explicit DenseOperator(std::uint32_t n)
      : n_(n), dim_(std::size_t{1} << n), data_(dim_ * dim_, 0.0) {}

  static DenseOperator identity(std::uint32_t n);

  std::uint32_t qubits() const { return n_; }
  std::size_t dim() const { return dim_; }

  std::complex<double>& at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const std::complex<double>& at(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::complex<double> trace() const;

  /// this * o; rows are computed in parallel for large dimensions, each by a
  /// single thread, so the result is identical for any thread count.
  DenseOperator multiply(const DenseOperator& o) const;

  double max_abs_diff(const DenseOperator& o) const;

  friend bool operator==(const DenseOperator&, const DenseOperator&) = default;

private:
  std::uint32_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<std::complex<double>> data_;
};

/// The rank-1 projector onto the stabilizer state: the product of (I+g)/2
/// over the generators, every generator sign taken as +1 (consistent with
/// the phase-free binary convention).
DenseOperator projector(const Stabilizer& s, std::uint32_t max_n = default_dense_max_n);

/// Traces out the qubits in `traced` and re-embeds the reduced operator on
/// the full register, tensored with the identity on the traced positions in
/// original qubit order; the output therefore keeps the full 2^n dimension.
DenseOperator partial_trace(const DenseOperator& m, const QubitSet& traced);

/// Tr{(Tr_{complement w1} P)(Tr_{complement w2} P)(Tr_{complement w12} P)}
/// for the state projector P and an arity-2 constraint tuple. Proportional
/// to the subset-support count 2^v_dim with a per-tuple constant; invariant
/// under local unitaries.
double lu_trace_invariant(const Stabilizer& s, const OmegaTuple& omega,
                          std::uint32_t max_n = default_dense_max_n);

}  // namespace lcinv
