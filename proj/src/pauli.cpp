#include "spingeo/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace spingeo::pauli {

namespace {

char letter(int x, int z) {
  static const char tab[2][2] = {{'I', 'Z'}, {'X', 'Y'}};
  return tab[x][z];
}

// Per-qubit phase exponent of P(a) * P(b) relative to the canonical
// P(a^b), with codes c = (x<<1)|z: 0=I, 1=Z, 2=X, 3=Y.
// X*Y = iZ, Y*Z = iX, Z*X = iY; reversed order picks up i^3.
int single_phase(int a, int b) {
  if (a == 0 || b == 0 || a == b) return 0;
  // cyclic order X(2) -> Y(3) -> Z(1) -> X(2)
  if ((a == 2 && b == 3) || (a == 3 && b == 1) || (a == 1 && b == 2)) return 1;
  return 3;
}

ComplexMatrix single_matrix(int code) {
  ComplexMatrix m(2);
  const GaussianRational one(1), i = GaussianRational::i();
  switch (code) {
    case 0:  // I
      m.at(0, 0) = one; m.at(1, 1) = one; break;
    case 2:  // X
      m.at(0, 1) = one; m.at(1, 0) = one; break;
    case 3:  // Y
      m.at(0, 1) = -i; m.at(1, 0) = i; break;
    default:  // Z
      m.at(0, 0) = one; m.at(1, 1) = -one; break;
  }
  return m;
}

}  // namespace

std::string PauliString::label() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n_qubits));
  for (int q = 0; q < n_qubits; ++q)
    out.push_back(letter((x_bits >> q) & 1, (z_bits >> q) & 1));
  return out;
}

std::string PhasedPauli::label() const {
  static const char* prefix[4] = {"", "+i", "-", "-i"};
  return prefix[((phase_exp % 4) + 4) % 4] + string.label();
}

PhasedPauli parse_pauli(const std::string& label, int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("qubit count out of range 1..64");
  std::size_t pos = 0;
  int phase = 0;
  if (pos < label.size() && (label[pos] == '+' || label[pos] == '-')) {
    phase = (label[pos] == '-') ? 2 : 0;
    ++pos;
    if (pos < label.size() && label[pos] == 'i') {
      phase += 1;
      ++pos;
    }
  }
  if (label.size() - pos != static_cast<std::size_t>(n))
    throw std::invalid_argument("pauli label '" + label + "' does not have " +
                                std::to_string(n) + " body characters");
  PhasedPauli out;
  out.string.n_qubits = n;
  out.phase_exp = phase;
  for (int q = 0; q < n; ++q) {
    switch (label[pos + q]) {
      case 'I': break;
      case 'X': out.string.x_bits |= 1ULL << q; break;
      case 'Y': out.string.x_bits |= 1ULL << q; out.string.z_bits |= 1ULL << q; break;
      case 'Z': out.string.z_bits |= 1ULL << q; break;
      default:
        throw std::invalid_argument(std::string("invalid pauli character '") +
                                    label[pos + q] + "' in '" + label + "'");
    }
  }
  return out;
}

PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b) {
  if (a.string.n_qubits != b.string.n_qubits)
    throw std::invalid_argument("qubit-count mismatch in pauli product");
  PhasedPauli out;
  out.string.n_qubits = a.string.n_qubits;
  out.string.x_bits = a.string.x_bits ^ b.string.x_bits;
  out.string.z_bits = a.string.z_bits ^ b.string.z_bits;
  int phase = a.phase_exp + b.phase_exp;
  for (int q = 0; q < a.string.n_qubits; ++q) {
    int ca = static_cast<int>(((a.string.x_bits >> q) & 1) << 1 | ((a.string.z_bits >> q) & 1));
    int cb = static_cast<int>(((b.string.x_bits >> q) & 1) << 1 | ((b.string.z_bits >> q) & 1));
    phase += single_phase(ca, cb);
  }
  out.phase_exp = phase & 3;
  return out;
}

int symplectic_form(const PauliString& a, const PauliString& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("qubit-count mismatch in symplectic form");
  return static_cast<int>((std::popcount(a.x_bits & b.z_bits) +
                           std::popcount(a.z_bits & b.x_bits)) & 1);
}

bool commutes(const PauliString& a, const PauliString& b) {
  return symplectic_form(a, b) == 0;
}

ComplexMatrix to_matrix(const PhasedPauli& p, int max_qubits) {
  if (p.string.n_qubits > max_qubits)
    throw std::invalid_argument("qubit count exceeds matrix bound");
  ComplexMatrix m = ComplexMatrix::identity(1);
  for (int q = 0; q < p.string.n_qubits; ++q) {
    int c = static_cast<int>(((p.string.x_bits >> q) & 1) << 1 |
                             ((p.string.z_bits >> q) & 1));
    m = m.kron(single_matrix(c));
  }
  return m.scaled(GaussianRational::i_pow(p.phase_exp));
}

ComplexMatrix to_matrix(const PauliString& p, int max_qubits) {
  return to_matrix(PhasedPauli{p, 0}, max_qubits);
}

std::vector<PauliString> all_points(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("all_points: n out of range 1..16");
  std::vector<PauliString> out;
  out.reserve((1ULL << (2 * n)) - 1);
  for (std::uint64_t x = 0; x < (1ULL << n); ++x)
    for (std::uint64_t z = 0; z < (1ULL << n); ++z) {
      if (x == 0 && z == 0) continue;
      out.push_back(PauliString{n, x, z});
    }
  return out;
}

long long num_points(int n) { return (1LL << (2 * n)) - 1; }

long long degree(int n) {
  if (n < 1) throw std::invalid_argument("degree: n must be positive");
  return num_points(n) - 1 - (1LL << (2 * n - 1));
}

CommutationGraph commutation_graph(int n, int max_n) {
  if (n < 1 || n > max_n)
    throw std::invalid_argument("commutation_graph: n exceeds bound");
  CommutationGraph g;
  g.vertices = all_points(n);
  g.adjacency.resize(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (commutes(g.vertices[i], g.vertices[j])) {
        g.adjacency[i].push_back(static_cast<int>(j));
        g.adjacency[j].push_back(static_cast<int>(i));
      }
  return g;
}

std::vector<PauliString> centralizer(const PauliString& p) {
  if (p.is_identity())
    throw std::invalid_argument("centralizer: identity is not a point");
  std::vector<PauliString> out;
  for (const PauliString& q : all_points(p.n_qubits))
    if (q != p && commutes(p, q)) out.push_back(q);
  return out;
}

}  // namespace spingeo::pauli
