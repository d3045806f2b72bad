#include "liekit/catalog.hpp"

#include <cctype>

namespace liekit {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

void append_strict_upper(MatrixBasis& b, std::size_t n, const char* prefix) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      b.names.push_back(prefix + idx(i) + idx(j));
      b.matrices.push_back(elementary(n, i, j));
    }
}

void append_traceless_diagonal(MatrixBasis& b, std::size_t n) {
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b.names.push_back("H" + idx(i));
    b.matrices.push_back(elementary(n, i, i) - elementary(n, i + 1, i + 1));
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace

RatMatrix elementary(std::size_t n, std::size_t row, std::size_t col) {
  RatMatrix m(n, n);
  m(row, col) = 1;
  return m;
}

MatrixBasis st_basis(std::size_t n) {
  MatrixBasis b;
  append_traceless_diagonal(b, n);
  append_strict_upper(b, n, "T");
  return b;
}

MatrixBasis strict_upper_basis(std::size_t n) {
  MatrixBasis b;
  append_strict_upper(b, n, "T");
  return b;
}

MatrixBasis upper_basis(std::size_t n) {
  MatrixBasis b;
  for (std::size_t i = 0; i < n; ++i) {
    b.names.push_back("T" + idx(i) + idx(i));
    b.matrices.push_back(elementary(n, i, i));
  }
  append_strict_upper(b, n, "T");
  return b;
}

MatrixBasis traceless_diagonal_basis(std::size_t n) {
  MatrixBasis b;
  append_traceless_diagonal(b, n);
  return b;
}

MatrixBasis sl_basis(std::size_t n) {
  MatrixBasis b;
  append_traceless_diagonal(b, n);
  append_strict_upper(b, n, "E");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      b.names.push_back("E" + idx(j) + idx(i));
      b.matrices.push_back(elementary(n, j, i));
    }
  return b;
}

LieAlgebra abelian(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("e" + idx(i));
  return LieAlgebra::make("abelian" + std::to_string(m), std::move(names), {});
}

LieAlgebra heisenberg(std::size_t dim) {
  require(dim % 2 == 1 && dim >= 3, "heisenberg: dimension must be odd and at least 3");
  const std::size_t k = (dim - 1) / 2;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("x" + idx(i));
  for (std::size_t i = 0; i < k; ++i) names.push_back("y" + idx(i));
  names.push_back("z");
  LieAlgebra::UpperTable t;
  for (std::size_t i = 0; i < k; ++i) t.emplace(std::make_pair(i, k + i), unit_vector(dim, dim - 1));
  return LieAlgebra::make("heisenberg" + std::to_string(dim), std::move(names), t);
}

LieAlgebra st(std::size_t n) {
  require(n >= 2, "st: n must be at least 2");
  auto b = st_basis(n);
  return from_matrix_basis("st" + std::to_string(n), b.names, b.matrices);
}

LieAlgebra st_prime(std::size_t n) {
  require(n >= 2, "st_prime: n must be at least 2");
  auto b = strict_upper_basis(n);
  return from_matrix_basis("n" + std::to_string(n), b.names, b.matrices);
}

LieAlgebra upper_triangular(std::size_t n) {
  require(n >= 1, "t: n must be at least 1");
  auto b = upper_basis(n);
  return from_matrix_basis("t" + std::to_string(n), b.names, b.matrices);
}

LieAlgebra diagonal(std::size_t n) {
  require(n >= 2, "d: n must be at least 2");
  auto b = traceless_diagonal_basis(n);
  return from_matrix_basis("d" + std::to_string(n), b.names, b.matrices);
}

LieAlgebra sl(std::size_t n) {
  require(n >= 2, "sl: n must be at least 2");
  auto b = sl_basis(n);
  return from_matrix_basis("sl" + std::to_string(n), b.names, b.matrices);
}

LieAlgebra big_n(std::size_t n) {
  LieAlgebra sum = direct_sum(st_prime(n), abelian(1));
  auto names = sum.basis_names();
  names.back() = "c";
  return LieAlgebra::make("N" + std::to_string(n), std::move(names), sum.upper_table());
}

LieAlgebra mueller_roemer7() {
  constexpr std::size_t n = 7;
  LieAlgebra::UpperTable t;
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, int sign) {
    RatVector v(n);
    v[k - 1] = sign;
    t.emplace(std::make_pair(i - 1, j - 1), std::move(v));
  };
  for (std::size_t k = 2; k <= 6; ++k) set(1, k, k + 1, 1);
  set(2, 3, 6, 1);
  set(2, 4, 7, 1);
  set(3, 4, 7, 1);
  set(2, 5, 7, -1);
  return LieAlgebra::make("mueller_roemer7", {"X1", "X2", "X3", "X4", "X5", "X6", "X7"}, t);
}

LieAlgebra catalog(const std::string& family, std::size_t p) {
  if (family == "abelian") return abelian(p);
  if (family == "heisenberg") return heisenberg(p);
  if (family == "st") return st(p);
  if (family == "st_prime") return st_prime(p);
  if (family == "t") return upper_triangular(p);
  if (family == "d") return diagonal(p);
  if (family == "sl") return sl(p);
  if (family == "N") {
    require(p >= 2, "N: n must be at least 2");
    return big_n(p);
  }
  if (family == "mueller_roemer7") {
    require(p == 7, "mueller_roemer7 takes parameter 7");
    return mueller_roemer7();
  }
  if (family == "st_c") return realify(st(p), "stc" + std::to_string(p));
  if (family == "sl_c") return realify(sl(p), "slc" + std::to_string(p));
  throw InputError("unknown catalog family: " + family);
}

LieAlgebra catalog_lookup(const std::string& id) {
  std::size_t split = id.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(id[split - 1]))) --split;
  if (split == id.size() || split == 0) throw InputError("unknown catalog name: " + id);
  const std::string head = id.substr(0, split);
  if (id.size() - split > 3) throw InputError("catalog parameter too large: " + id);
  const std::size_t p = std::stoul(id.substr(split));
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"ab", "abelian"},     {"abelian", "abelian"},   {"h", "heisenberg"}, {"heisenberg", "heisenberg"},
      {"st", "st"},          {"n", "st_prime"},        {"st_prime", "st_prime"}, {"t", "t"},
      {"d", "d"},            {"sl", "sl"},             {"N", "N"},          {"mr", "mueller_roemer"},
      {"mueller_roemer", "mueller_roemer"}, {"stc", "st_c"}, {"slc", "sl_c"}};
  for (const auto& [alias, family] : aliases) {
    if (alias != head) continue;
    if (family == "mueller_roemer") return catalog("mueller_roemer7", p);
    return catalog(family, p);
  }
  throw InputError("unknown catalog name: " + id);
}

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"ab1", "abelian(1)"},
      {"ab2", "abelian(2)"},
      {"ab3", "abelian(3)"},
      {"h3", "Heisenberg algebra, dim 3: [x1,y1] = z"},
      {"h5", "Heisenberg algebra, dim 5"},
      {"st2", "traceless upper triangular 2x2 (basis H1, T12)"},
      {"st3", "traceless upper triangular 3x3"},
      {"st4", "traceless upper triangular 4x4"},
      {"st5", "traceless upper triangular 5x5"},
      {"st6", "traceless upper triangular 6x6"},
      {"n2", "strictly upper triangular 2x2 = st(2)'"},
      {"n3", "strictly upper triangular 3x3 = st(3)'"},
      {"n4", "strictly upper triangular 4x4 = st(4)'"},
      {"n5", "strictly upper triangular 5x5 = st(5)'"},
      {"n6", "strictly upper triangular 6x6 = st(6)'"},
      {"t2", "upper triangular 2x2"},
      {"t3", "upper triangular 3x3"},
      {"d3", "traceless diagonal 3x3"},
      {"sl2", "sl(2)"},
      {"sl3", "sl(3)"},
      {"N2", "n(2) + R"},
      {"N3", "n(3) + R"},
      {"N4", "n(4) + R"},
      {"mr7", "Mueller-Roemer 7-dimensional nilpotent algebra"},
      {"stc2", "st(2,C) realified"},
      {"slc2", "sl(2,C) realified"},
  };
}

}  // namespace liekit
