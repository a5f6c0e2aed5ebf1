#pragma once

#include <array>
#include <string>

#include "spingeo/geometry.hpp"
#include "spingeo/matrix.hpp"
#include "spingeo/rational.hpp"

namespace spingeo::hypercomplex {

/// Quaternion with exact rational coefficients (real, i, j, k).
struct Quaternion {
  std::array<Rational, 4> c{};

  Quaternion() = default;
  Quaternion(Rational r, Rational i, Rational j, Rational k) : c{r, i, j, k} {}

  static Quaternion unit(int idx);  // 0 -> 1, 1 -> i, 2 -> j, 3 -> k

  Quaternion conj() const;
  Rational norm_squared() const;

  friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c == b.c; }
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
};

/// Octonion with exact rational coefficients (real part plus e1..e7).
struct Octonion {
  std::array<Rational, 8> c{};

  Octonion() = default;
  static Octonion unit(int idx);  // 0 -> 1, 1..7 -> e_idx

  Octonion conj() const;
  Rational norm_squared() const;
  bool is_zero() const;

  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
  friend Octonion operator+(const Octonion& a, const Octonion& b);
  friend Octonion operator-(const Octonion& a, const Octonion& b);

  std::string str() const;
};

/// An oriented octonion line: e_i * e_j = sign * e_k.
struct SignedTriad {
  int i = 0, j = 0, k = 0;
  int sign = 1;
};

/// One entry of the unit multiplication table: e_row * e_col = sign * e_index,
/// where index 0 means the real unit (diagonal entries are -1).
struct TableEntry {
  int sign = 1;
  int index = 0;
};

using Table = std::array<std::array<TableEntry, 7>, 7>;

/// The stored 7x7 table of unit products, rows/columns indexed 1..7.
const Table& oct_table();

Quaternion quat_mul(const Quaternion& a, const Quaternion& b);

/// q0*I + q1*(-i sigma_x) + q2*(-i sigma_y) + q3*(-i sigma_z) as an exact
/// 2x2 complex matrix; an algebra homomorphism.
ComplexMatrix quat_to_pauli(const Quaternion& q);

/// Bilinear product driven by the stored table.
Octonion oct_mul(const Octonion& a, const Octonion& b);

/// (xy)z - x(yz).
Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z);

/// norm2(x*y) == norm2(x)*norm2(y), exactly.
bool norm_composition_check(const Octonion& x, const Octonion& y);

/// Each off-diagonal row and column carries exactly 3 plus and 3 minus signs.
bool verify_sign_balance();
/// Same check over an arbitrary candidate table.
bool sign_balance_ok(const Table& t);

/// The index-shift (i,j,k -> i+1,j+1,k+1) and index-doubling
/// (i,j,k -> 2i,2j,2k) rules, indices wrapped into 1..7, hold for every
/// off-diagonal entry with the sign preserved.
bool verify_index_rules();
/// Same check over an arbitrary candidate table.
bool index_rules_ok(const Table& t);

/// The 7 oriented triads e_i * e_j = +e_k (cyclically reduced, i minimal).
std::array<SignedTriad, 7> fano_triads();

/// The Fano plane read off the multiplication table: points e1..e7,
/// one line per triad, all commuting-free (kind untagged), orientations set.
geometry::IncidenceStructure fano_from_table();

}  // namespace spingeo::hypercomplex
