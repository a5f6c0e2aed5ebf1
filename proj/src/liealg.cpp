#include "spingeo/liealg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spingeo::liealg {

StructureConstantAlgebra::StructureConstantAlgebra(std::vector<std::string> basis_labels)
    : labels_(std::move(basis_labels)) {
  std::size_t d = labels_.size();
  f_.assign(d * d * d, GaussianRational());
}

const GaussianRational& StructureConstantAlgebra::f(int i, int j, int k) const {
  std::size_t d = labels_.size();
  return f_[(static_cast<std::size_t>(i) * d + static_cast<std::size_t>(j)) * d +
            static_cast<std::size_t>(k)];
}

void StructureConstantAlgebra::set_f(int i, int j, int k, const GaussianRational& value) {
  std::size_t d = labels_.size();
  f_[(static_cast<std::size_t>(i) * d + static_cast<std::size_t>(j)) * d +
     static_cast<std::size_t>(k)] = value;
  f_[(static_cast<std::size_t>(j) * d + static_cast<std::size_t>(i)) * d +
     static_cast<std::size_t>(k)] = -value;
}

std::vector<GaussianRational> StructureConstantAlgebra::bracket(
    const std::vector<GaussianRational>& x, const std::vector<GaussianRational>& y) const {
  int d = dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw std::invalid_argument("bracket: coefficient vector dimension mismatch");
  std::vector<GaussianRational> out(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y[static_cast<std::size_t>(j)].is_zero()) continue;
      GaussianRational xy = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (int k = 0; k < d; ++k)
        out[static_cast<std::size_t>(k)] += xy * f(i, j, k);
    }
  }
  return out;
}

StructureConstantAlgebra make_so4() {
  StructureConstantAlgebra a({"Lx", "Ly", "Lz", "Ax", "Ay", "Az"});
  const GaussianRational i = GaussianRational::i();
  // epsilon over the cyclic triples (x,y,z)
  const int eps[3][2] = {{1, 2}, {2, 0}, {0, 1}};  // [k] = (i,j) with eps_ijk = +1
  for (int k = 0; k < 3; ++k) {
    int p = eps[k][0], q = eps[k][1];
    a.set_f(p, q, k, i);              // [L_p, L_q] = i L_k
    a.set_f(p, q + 3, k + 3, i);      // [L_p, A_q] = i A_k
    a.set_f(p + 3, q, k + 3, i);      // [A_p, L_q] = i A_k
    a.set_f(p + 3, q + 3, k, i);      // [A_p, A_q] = i L_k
  }
  return a;
}

bool jacobi_check(const StructureConstantAlgebra& a) {
  int d = a.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k)
        for (int m = 0; m < d; ++m) {
          GaussianRational sum;
          // [[i,j],k] + [[j,k],i] + [[k,i],j], coefficient of b_m
          for (int l = 0; l < d; ++l) {
            sum += a.f(i, j, l) * a.f(l, k, m);
            sum += a.f(j, k, l) * a.f(l, i, m);
            sum += a.f(k, i, l) * a.f(l, j, m);
          }
          if (!sum.is_zero()) return false;
        }
  return true;
}

namespace {

// Gauss-Jordan inverse over the rationals; throws on a singular matrix.
std::vector<Rational> invert(const BasisChange& t) {
  int d = t.dim;
  std::vector<Rational> a(t.m);
  std::vector<Rational> inv(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) inv[static_cast<std::size_t>(i * d + i)] = Rational(1);
  auto A = [&](int r, int c) -> Rational& { return a[static_cast<std::size_t>(r * d + c)]; };
  auto B = [&](int r, int c) -> Rational& { return inv[static_cast<std::size_t>(r * d + c)]; };
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (!A(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) throw std::invalid_argument("change_basis: singular matrix");
    if (pivot != col)
      for (int c = 0; c < d; ++c) {
        std::swap(A(pivot, c), A(col, c));
        std::swap(B(pivot, c), B(col, c));
      }
    Rational p = A(col, col);
    for (int c = 0; c < d; ++c) {
      A(col, c) = A(col, c) / p;
      B(col, c) = B(col, c) / p;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || A(r, col).is_zero()) continue;
      Rational factor = A(r, col);
      for (int c = 0; c < d; ++c) {
        A(r, c) -= factor * A(col, c);
        B(r, c) -= factor * B(col, c);
      }
    }
  }
  return inv;
}

}  // namespace

StructureConstantAlgebra change_basis(const StructureConstantAlgebra& a,
                                      const BasisChange& t,
                                      std::vector<std::string> new_labels) {
  int d = a.dim();
  if (t.dim != d) throw std::invalid_argument("change_basis: dimension mismatch");
  std::vector<Rational> tinv = invert(t);
  auto Tinv = [&](int r, int c) -> const Rational& {
    return tinv[static_cast<std::size_t>(r * d + c)];
  };
  if (new_labels.empty())
    for (int i = 0; i < d; ++i) new_labels.push_back("b'" + std::to_string(i));
  if (static_cast<int>(new_labels.size()) != d)
    throw std::invalid_argument("change_basis: wrong label count");
  StructureConstantAlgebra out(std::move(new_labels));
  // f'(a,b,c) = sum_{i,j,k} T(a,i) T(b,j) f(i,j,k) Tinv(k,c)
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q)
      for (int c = 0; c < d; ++c) {
        GaussianRational sum;
        for (int i = 0; i < d; ++i) {
          if (t.at(p, i).is_zero()) continue;
          for (int j = 0; j < d; ++j) {
            if (t.at(q, j).is_zero()) continue;
            GaussianRational w(t.at(p, i) * t.at(q, j));
            for (int k = 0; k < d; ++k) {
              if (a.f(i, j, k).is_zero()) continue;
              sum += w * a.f(i, j, k) * GaussianRational(Tinv(k, c));
            }
          }
        }
        if (!sum.is_zero()) out.set_f(p, q, c, sum);
      }
  return out;
}

BasisChange so4_split_basis() {
  BasisChange t;
  t.dim = 6;
  t.m.assign(36, Rational(0));
  const Rational half(1, 2);
  for (int i = 0; i < 3; ++i) {
    t.at(i, i) = half;          // J+_i = (L_i + A_i)/2
    t.at(i, i + 3) = half;
    t.at(i + 3, i) = half;      // J-_i = (L_i - A_i)/2
    t.at(i + 3, i + 3) = -half;
  }
  return t;
}

std::vector<std::vector<int>> commuting_block_decomposition(
    const StructureConstantAlgebra& a) {
  int d = a.dim();
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!a.f(i, j, k).is_zero()) {
          unite(i, j);
          unite(i, k);
        }
  std::vector<std::vector<int>> blocks;
  std::vector<int> root_block(static_cast<std::size_t>(d), -1);
  for (int i = 0; i < d; ++i) {
    int r = find(i);
    if (root_block[static_cast<std::size_t>(r)] < 0) {
      root_block[static_cast<std::size_t>(r)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(root_block[static_cast<std::size_t>(r)])].push_back(i);
  }
  return blocks;
}

namespace {

// [x,y] lands on z alone, with a nonzero coefficient
bool bracket_onto(const StructureConstantAlgebra& a, int x, int y, int z) {
  if (a.f(x, y, z).is_zero()) return false;
  for (int k = 0; k < a.dim(); ++k)
    if (k != z && !a.f(x, y, k).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<std::array<int, 3>> su2_triples(const StructureConstantAlgebra& a) {
  std::vector<std::array<int, 3>> out;
  int d = a.dim();
  for (int x = 0; x < d; ++x)
    for (int y = x + 1; y < d; ++y)
      for (int z = y + 1; z < d; ++z)
        if (bracket_onto(a, x, y, z) && bracket_onto(a, y, z, x) &&
            bracket_onto(a, z, x, y))
          out.push_back({x, y, z});
  return out;
}

geometry::IncidenceStructure fano_arrangement_so4() {
  StructureConstantAlgebra so4 = make_so4();
  geometry::IncidenceStructure s;
  s.points = so4.labels();
  s.points.push_back("1");
  const int unit = 6;
  for (const auto& t : su2_triples(so4)) {
    geometry::Line l;
    l.points = {t[0], t[1], t[2]};
    l.kind = geometry::LineKind::Anticommuting;
    l.orientation = {t[0], t[1], t[2]};
    s.lines.push_back(std::move(l));
  }
  for (int i = 0; i < 3; ++i) {
    geometry::Line l;
    l.points = {i, i + 3, unit};
    l.kind = geometry::LineKind::Commuting;
    s.lines.push_back(std::move(l));
  }
  std::sort(s.lines.begin(), s.lines.end(),
            [](const geometry::Line& a, const geometry::Line& b) {
              return a.points < b.points;
            });
  return s;
}

}  // namespace spingeo::liealg
