#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spingeo/matrix.hpp"

namespace spingeo::pauli {

/// Phaseless N-qubit Pauli string in the binary symplectic encoding:
/// per qubit, (x,z) = (0,0) -> I, (1,0) -> X, (1,1) -> Y, (0,1) -> Z.
/// Qubit q lives in bit q; the first label character is qubit 0.
struct PauliString {
  int n_qubits = 1;
  std::uint64_t x_bits = 0;
  std::uint64_t z_bits = 0;

  bool is_identity() const { return x_bits == 0 && z_bits == 0; }

  /// Label over {I,X,Y,Z}, first character = qubit 0.
  std::string label() const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_qubits == b.n_qubits && a.x_bits == b.x_bits && a.z_bits == b.z_bits;
  }
  friend bool operator!=(const PauliString& a, const PauliString& b) { return !(a == b); }
  /// Lexicographic by (x_bits, z_bits); the canonical enumeration order.
  friend bool operator<(const PauliString& a, const PauliString& b) {
    if (a.x_bits != b.x_bits) return a.x_bits < b.x_bits;
    return a.z_bits < b.z_bits;
  }
};

/// A Pauli string carrying an overall i^phase_exp, phase_exp in 0..3.
struct PhasedPauli {
  PauliString string;
  int phase_exp = 0;

  /// Label with phase prefix: "", "+i", "-", "-i".
  std::string label() const;

  friend bool operator==(const PhasedPauli& a, const PhasedPauli& b) {
    return a.string == b.string && a.phase_exp == b.phase_exp;
  }
  friend bool operator!=(const PhasedPauli& a, const PhasedPauli& b) { return !(a == b); }
};

/// Parse a label of n characters from {I,X,Y,Z}, optionally prefixed by
/// one of {+, -, +i, -i}. Throws std::invalid_argument naming the
/// offending character on malformed input.
PhasedPauli parse_pauli(const std::string& label, int n);

/// Exact operator product: bits XOR, phase accumulated mod 4.
/// Throws std::invalid_argument on qubit-count mismatch.
PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b);

/// Symplectic form x_a.z_b + z_a.x_b over GF(2); zero iff commuting.
bool commutes(const PauliString& a, const PauliString& b);

/// GF(2) value of the symplectic form itself (0 or 1).
int symplectic_form(const PauliString& a, const PauliString& b);

/// Exact 2^N x 2^N matrix i^phase_exp * (tensor product of the
/// single-qubit Paulis). Throws std::invalid_argument past max_qubits.
ComplexMatrix to_matrix(const PhasedPauli& p, int max_qubits = 10);
ComplexMatrix to_matrix(const PauliString& p, int max_qubits = 10);

/// All 4^N - 1 non-identity strings, lexicographic by (x_bits, z_bits).
std::vector<PauliString> all_points(int n);

/// Closed-form degree v - 1 - 2^(2N-1) of the commutation graph.
long long degree(int n);

/// Number of points, 4^N - 1.
long long num_points(int n);

struct CommutationGraph {
  std::vector<PauliString> vertices;               // canonical order
  std::vector<std::vector<int>> adjacency;         // sorted neighbor indices
};

/// Undirected graph on all_points(n) with an edge iff commuting.
/// Throws std::invalid_argument past max_n (default 8).
CommutationGraph commutation_graph(int n, int max_n = 8);

/// All non-identity strings commuting with p, excluding p itself.
/// Throws std::invalid_argument if p is the identity.
std::vector<PauliString> centralizer(const PauliString& p);

}  // namespace spingeo::pauli
