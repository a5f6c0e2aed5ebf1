#include "spingeo/hypercomplex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spingeo::hypercomplex {

namespace {

// The stored artifact: 49 signed unit products, rows/columns e1..e7.
// Index 0 stands for the real unit, so {-1, 0} on the diagonal reads -1.
constexpr std::array<std::array<TableEntry, 7>, 7> kTable{{
    {{{-1, 0}, {+1, 4}, {+1, 7}, {-1, 2}, {+1, 6}, {-1, 5}, {-1, 3}}},
    {{{-1, 4}, {-1, 0}, {+1, 5}, {+1, 1}, {-1, 3}, {+1, 7}, {-1, 6}}},
    {{{-1, 7}, {-1, 5}, {-1, 0}, {+1, 6}, {+1, 2}, {-1, 4}, {+1, 1}}},
    {{{+1, 2}, {-1, 1}, {-1, 6}, {-1, 0}, {+1, 7}, {+1, 3}, {-1, 5}}},
    {{{-1, 6}, {+1, 3}, {-1, 2}, {-1, 7}, {-1, 0}, {+1, 1}, {+1, 4}}},
    {{{+1, 5}, {-1, 7}, {+1, 4}, {-1, 3}, {-1, 1}, {-1, 0}, {+1, 2}}},
    {{{+1, 3}, {+1, 6}, {-1, 1}, {+1, 5}, {-1, 4}, {-1, 2}, {-1, 0}}},
}};

// wrap any positive index into 1..7
int wrap7(int n) { return ((n - 1) % 7) + 1; }

TableEntry unit_product(int i, int j) {
  if (i == 0) return {+1, j};
  if (j == 0) return {+1, i};
  return kTable[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

}  // namespace

const std::array<std::array<TableEntry, 7>, 7>& oct_table() { return kTable; }

Quaternion Quaternion::unit(int idx) {
  Quaternion q;
  q.c[static_cast<std::size_t>(idx)] = Rational(1);
  return q;
}

Quaternion Quaternion::conj() const {
  return Quaternion(c[0], -c[1], -c[2], -c[3]);
}

Rational Quaternion::norm_squared() const {
  Rational s;
  for (const Rational& x : c) s += x * x;
  return s;
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  Quaternion out;
  for (std::size_t i = 0; i < 4; ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  Quaternion out;
  for (std::size_t i = 0; i < 4; ++i) out.c[i] = a.c[i] - b.c[i];
  return out;
}

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
  const auto& p = a.c;
  const auto& q = b.c;
  return Quaternion(
      p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
      p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
      p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
      p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]);
}

ComplexMatrix quat_to_pauli(const Quaternion& q) {
  // i -> -i sigma_x, j -> -i sigma_y, k -> -i sigma_z
  ComplexMatrix m(2);
  GaussianRational i = GaussianRational::i();
  m.at(0, 0) = GaussianRational(q.c[0]) - i * GaussianRational(q.c[3]);
  m.at(0, 1) = GaussianRational(-q.c[2]) - i * GaussianRational(q.c[1]);
  m.at(1, 0) = GaussianRational(q.c[2]) - i * GaussianRational(q.c[1]);
  m.at(1, 1) = GaussianRational(q.c[0]) + i * GaussianRational(q.c[3]);
  return m;
}

Octonion Octonion::unit(int idx) {
  Octonion o;
  o.c[static_cast<std::size_t>(idx)] = Rational(1);
  return o;
}

Octonion Octonion::conj() const {
  Octonion out;
  out.c[0] = c[0];
  for (std::size_t i = 1; i < 8; ++i) out.c[i] = -c[i];
  return out;
}

Rational Octonion::norm_squared() const {
  Rational s;
  for (const Rational& x : c) s += x * x;
  return s;
}

bool Octonion::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_zero(); });
}

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion out;
  for (std::size_t i = 0; i < 8; ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion out;
  for (std::size_t i = 0; i < 8; ++i) out.c[i] = a.c[i] - b.c[i];
  return out;
}

std::string Octonion::str() const {
  std::string out;
  for (std::size_t i = 0; i < 8; ++i) {
    if (c[i].is_zero()) continue;
    std::string term = c[i].str();
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
    if (i > 0) out += "e" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Octonion oct_mul(const Octonion& a, const Octonion& b) {
  Octonion out;
  for (int i = 0; i < 8; ++i) {
    if (a.c[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.c[static_cast<std::size_t>(j)].is_zero()) continue;
      TableEntry e = unit_product(i, j);
      Rational term = a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
      if (e.sign < 0) term = -term;
      out.c[static_cast<std::size_t>(e.index)] += term;
    }
  }
  return out;
}

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
  return oct_mul(oct_mul(x, y), z) - oct_mul(x, oct_mul(y, z));
}

bool norm_composition_check(const Octonion& x, const Octonion& y) {
  return oct_mul(x, y).norm_squared() == x.norm_squared() * y.norm_squared();
}

bool sign_balance_ok(const Table& t) {
  for (int i = 0; i < 7; ++i) {
    int row_plus = 0, col_plus = 0;
    for (int j = 0; j < 7; ++j) {
      if (i == j) continue;
      row_plus += t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].sign > 0;
      col_plus += t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].sign > 0;
    }
    if (row_plus != 3 || col_plus != 3) return false;
  }
  return true;
}

bool verify_sign_balance() { return sign_balance_ok(kTable); }

bool index_rules_ok(const Table& t) {
  auto entry = [&](int i, int j) {
    return t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  };
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      TableEntry e = entry(i, j);
      TableEntry shifted = entry(wrap7(i + 1), wrap7(j + 1));
      if (shifted.sign != e.sign || shifted.index != wrap7(e.index + 1)) return false;
      TableEntry doubled = entry(wrap7(2 * i), wrap7(2 * j));
      if (doubled.sign != e.sign || doubled.index != wrap7(2 * e.index)) return false;
    }
  return true;
}

bool verify_index_rules() { return index_rules_ok(kTable); }

std::array<SignedTriad, 7> fano_triads() {
  std::array<SignedTriad, 7> out;
  std::size_t count = 0;
  std::set<std::set<int>> seen;
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      TableEntry e = unit_product(i, j);
      if (e.sign != +1) continue;
      if (!seen.insert({i, j, e.index}).second) continue;
      // rotate the positive cycle so the smallest index leads
      int a = i, b = j, c = e.index;
      while (a != std::min({a, b, c})) {
        int t = a; a = b; b = c; c = t;
      }
      if (count >= out.size()) throw std::logic_error("more than 7 triads in table");
      out[count++] = SignedTriad{a, b, c, +1};
    }
  if (count != 7) throw std::logic_error("octonion table does not yield 7 triads");
  std::sort(out.begin(), out.end(), [](const SignedTriad& s, const SignedTriad& t) {
    return std::tie(s.i, s.j, s.k) < std::tie(t.i, t.j, t.k);
  });
  return out;
}

geometry::IncidenceStructure fano_from_table() {
  geometry::IncidenceStructure s;
  for (int i = 1; i <= 7; ++i) s.points.push_back("e" + std::to_string(i));
  for (const SignedTriad& t : fano_triads()) {
    geometry::Line l;
    l.points = {t.i - 1, t.j - 1, t.k - 1};
    std::sort(l.points.begin(), l.points.end());
    l.orientation = {t.i - 1, t.j - 1, t.k - 1};
    s.lines.push_back(std::move(l));
  }
  std::sort(s.lines.begin(), s.lines.end(),
            [](const geometry::Line& a, const geometry::Line& b) {
              return a.points < b.points;
            });
  return s;
}

}  // namespace spingeo::hypercomplex
