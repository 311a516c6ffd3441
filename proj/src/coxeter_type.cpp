#include "coxabs/coxeter_type.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coxabs {

namespace {

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw std::invalid_argument("malformed " + std::string(context) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f = saturating_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

}  // namespace

TypeLabel TypeLabel::make(Family family, int rank, int bond) {
  auto bad = [&] {
    return std::invalid_argument("invalid Coxeter type: family/rank combination not finite");
  };
  switch (family) {
    case Family::A:
      if (rank < 1) throw bad();
      return {family, rank, 0};
    case Family::B:
      if (rank < 2) throw bad();
      return {family, rank, 0};
    case Family::D:
      if (rank < 4) throw bad();
      return {family, rank, 0};
    case Family::E:
      if (rank < 6 || rank > 8) throw bad();
      return {family, rank, 0};
    case Family::F:
      if (rank != 4) throw bad();
      return {family, rank, 0};
    case Family::H:
      if (rank < 3 || rank > 4) throw bad();
      return {family, rank, 0};
    case Family::I2:
      if (rank != 2 || bond < 3) {
        throw std::invalid_argument("I2(m) requires m >= 3 (I2(2) is A1xA1)");
      }
      if (bond == 3) return {Family::A, 2, 0};
      if (bond == 4) return {Family::B, 2, 0};
      return {family, 2, bond};
  }
  throw bad();
}

TypeLabel TypeLabel::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty type label");
  if (text == "G2") return make(Family::I2, 2, 6);
  if (text.size() > 3 && text.substr(0, 3) == "I2(" && text.back() == ')') {
    return make(Family::I2, 2, parse_int(text.substr(3, text.size() - 4), "dihedral order"));
  }
  Family family;
  switch (text.front()) {
    case 'A': family = Family::A; break;
    case 'B': family = Family::B; break;
    case 'C': family = Family::B; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    case 'F': family = Family::F; break;
    case 'H': family = Family::H; break;
    default: throw std::invalid_argument("unknown Coxeter type '" + std::string(text) + "'");
  }
  return make(family, parse_int(text.substr(1), "type rank"));
}

std::string TypeLabel::to_string() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F" + std::to_string(rank);
    case Family::H: return "H" + std::to_string(rank);
    case Family::I2: return "I2(" + std::to_string(bond) + ")";
  }
  return "?";
}

std::vector<TypeLabel> parse_type_product(std::string_view text) {
  std::vector<TypeLabel> labels;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('x', start);
    if (end == std::string_view::npos) end = text.size();
    labels.push_back(TypeLabel::parse(text.substr(start, end - start)));
    start = end + 1;
  }
  return labels;
}

std::string to_string(const std::vector<TypeLabel>& labels) {
  if (labels.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += "x";
    out += labels[i].to_string();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const TypeLabel& label) { return os << label.to_string(); }

bool is_involutive_type(const TypeLabel& label) {
  switch (label.family) {
    case Family::A: return label.rank == 1;
    case Family::B: return true;
    case Family::D: return label.rank % 2 == 0;
    case Family::E: return label.rank != 6;
    case Family::F: return true;
    case Family::H: return true;
    case Family::I2: return label.bond % 2 == 0;
  }
  return false;
}

bool is_lattice_type(const TypeLabel& label) {
  switch (label.family) {
    case Family::A: return label.rank == 1;
    case Family::B: return true;
    case Family::D: return label.rank == 4;
    case Family::E: return false;
    case Family::F: return false;
    case Family::H: return label.rank == 3;
    case Family::I2: return label.bond % 2 == 0;
  }
  return false;
}

std::uint64_t group_order(const TypeLabel& label) {
  const int n = label.rank;
  switch (label.family) {
    case Family::A: return factorial(n + 1);
    case Family::B: return saturating_mul(std::uint64_t{1} << std::min(n, 63), factorial(n));
    case Family::D: return saturating_mul(std::uint64_t{1} << std::min(n - 1, 63), factorial(n));
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::H: return n == 3 ? 120 : 14400;
    case Family::I2: return 2 * static_cast<std::uint64_t>(label.bond);
  }
  return 0;
}

std::uint64_t group_order(const std::vector<TypeLabel>& labels) {
  std::uint64_t order = 1;
  for (const auto& l : labels) order = saturating_mul(order, group_order(l));
  return order;
}

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw std::invalid_argument("Coxeter matrix must have positive rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw std::invalid_argument("Coxeter matrix must be square");
    if (entries_[i][i] != 1) throw std::invalid_argument("Coxeter matrix diagonal must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (entries_[i][j] != entries_[j][i]) throw std::invalid_argument("Coxeter matrix must be symmetric");
      if (i != j && entries_[i][j] < 2) throw std::invalid_argument("off-diagonal Coxeter entries must be >= 2");
    }
  }
}

CoxeterMatrix CoxeterMatrix::parse(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n <= 0) throw std::invalid_argument("matrix file: expected a positive rank on the first line");
  std::vector<std::vector<int>> entries(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(in >> entries[i][j])) throw std::invalid_argument("matrix file: expected " + std::to_string(n * n) + " entries");
    }
  }
  return CoxeterMatrix(std::move(entries));
}

CoxeterMatrix CoxeterMatrix::named(const TypeLabel& label) {
  const int n = label.rank;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto bond = [&](int a, int b, int value) { m[a][b] = m[b][a] = value; };
  switch (label.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case Family::B:
      bond(0, 1, 4);
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case Family::D:
      bond(0, 2, 3);
      bond(1, 2, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case Family::E:
      bond(0, 2, 3);
      bond(1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case Family::F:
      bond(0, 1, 3);
      bond(1, 2, 4);
      bond(2, 3, 3);
      break;
    case Family::H:
      bond(0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case Family::I2:
      bond(0, 1, label.bond);
      break;
  }
  return CoxeterMatrix(std::move(m));
}

CoxeterMatrix CoxeterMatrix::named(std::string_view text) {
  const auto labels = parse_type_product(text);
  if (labels.size() == 1) return named(labels.front());
  std::vector<CoxeterMatrix> blocks;
  for (const auto& l : labels) blocks.push_back(named(l));
  return block_diagonal(blocks);
}

CoxeterMatrix CoxeterMatrix::block_diagonal(const std::vector<CoxeterMatrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.rank();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  int offset = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rank(); ++i) {
      for (int j = 0; j < b.rank(); ++j) m[offset + i][offset + j] = b(i, j);
    }
    offset += b.rank();
  }
  return CoxeterMatrix(std::move(m));
}

CoxeterMatrix named_type(const TypeLabel& label) { return CoxeterMatrix::named(label); }

std::vector<std::vector<int>> diagram_components(const CoxeterMatrix& matrix) {
  const int n = matrix.rank();
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> nodes{start};
    component[start] = id;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      for (int j = 0; j < n; ++j) {
        if (component[j] < 0 && matrix(nodes[k], j) >= 3) {
          component[j] = id;
          nodes.push_back(j);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(std::move(nodes));
  }
  return out;
}

CoxeterMatrix restrict_matrix(const CoxeterMatrix& matrix, const std::vector<int>& nodes) {
  const std::size_t k = nodes.size();
  std::vector<std::vector<int>> m(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = matrix(nodes[i], nodes[j]);
  }
  return CoxeterMatrix(std::move(m));
}

TypeLabel recognize_irreducible(const CoxeterMatrix& matrix) {
  const int n = matrix.rank();
  auto infinite = [] { return std::runtime_error("Coxeter diagram is not of finite type"); };
  if (diagram_components(matrix).size() != 1) throw std::invalid_argument("diagram is not connected");
  if (n == 1) return TypeLabel::make(Family::A, 1);
  if (n == 2) return TypeLabel::dihedral(matrix(0, 1));

  std::vector<int> degree(n, 0);
  int edges = 0;
  int heavy = 0;
  int heavy_a = -1;
  int heavy_b = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int m = matrix(i, j);
      if (m < 3) continue;
      ++edges;
      ++degree[i];
      ++degree[j];
      if (m >= 6) throw infinite();
      if (m >= 4) {
        ++heavy;
        heavy_a = i;
        heavy_b = j;
      }
    }
  }
  if (edges != n - 1) throw infinite();  // connected with a cycle
  const int max_degree = *std::max_element(degree.begin(), degree.end());

  if (heavy == 0) {
    if (max_degree <= 2) return TypeLabel::make(Family::A, n);
    if (max_degree > 3 || std::count(degree.begin(), degree.end(), 3) != 1) throw infinite();
    const int branch = static_cast<int>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
    std::vector<int> arms;
    for (int j = 0; j < n; ++j) {
      if (j == branch || matrix(branch, j) < 3) continue;
      int length = 1;
      int prev = branch;
      int cur = j;
      for (;;) {
        int next = -1;
        for (int k = 0; k < n; ++k) {
          if (k != prev && k != cur && matrix(cur, k) >= 3) next = k;
        }
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++length;
      }
      arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return TypeLabel::make(Family::D, n);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return TypeLabel::make(Family::E, n);
    throw infinite();
  }

  if (heavy != 1 || max_degree > 2) throw infinite();
  const int m = matrix(heavy_a, heavy_b);
  const bool at_end = degree[heavy_a] == 1 || degree[heavy_b] == 1;
  if (m == 4) {
    if (at_end) return TypeLabel::make(Family::B, n);
    if (n == 4) return TypeLabel::make(Family::F, 4);
    throw infinite();
  }
  if (m == 5 && at_end && (n == 3 || n == 4)) return TypeLabel::make(Family::H, n);
  throw infinite();
}

}  // namespace coxabs
