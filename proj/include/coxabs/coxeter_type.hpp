#pragma once

// Coxeter matrices, irreducible finite type labels, and the standard
// matrices of the named types.
//
// Node numbering of the named types (generators are 0-based in the API and
// printed 1-based as s1, s2, ...):
//
//   A_n    s1 - s2 - ... - sn
//   B_n    s1 =4= s2 - s3 - ... - sn
//   D_n    s1 and s2 both attached to s3, then s3 - s4 - ... - sn
//   E_n    s1 - s3 - s4 - s5 - ... - sn, with s2 attached to s4
//   F4     s1 - s2 =4= s3 - s4
//   H_n    s1 =5= s2 - s3 (- s4)
//   I2(m)  s1 =m= s2

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace coxabs {

enum class Family { A, B, D, E, F, H, I2 };

/// An irreducible finite Coxeter type. I2(3) is stored as A2 and I2(4) as B2.
struct TypeLabel {
  Family family = Family::A;
  int rank = 1;
  int bond = 0;  ///< dihedral order, I2 only

  static TypeLabel make(Family family, int rank, int bond = 0);
  static TypeLabel dihedral(int m) { return make(Family::I2, 2, m); }
  /// Parses "A3", "B4", "D6", "E7", "F4", "H3", "I2(8)", "G2".
  static TypeLabel parse(std::string_view text);

  std::string to_string() const;

  friend auto operator<=>(const TypeLabel&, const TypeLabel&) = default;
};

/// Parses a product of irreducible types such as "A1xB3".
std::vector<TypeLabel> parse_type_product(std::string_view text);

std::string to_string(const std::vector<TypeLabel>& labels);

std::ostream& operator<<(std::ostream& os, const TypeLabel& label);

/// Member of the list of irreducible types whose longest element is central:
/// A1, I2(2k) (k >= 2), B_n (n >= 3), D_2k (k >= 2), E7, E8, F4, H3, H4.
bool is_involutive_type(const TypeLabel& label);

/// Irreducible types whose interval [1, w0]_T is a lattice:
/// A1, I2(2k) (k >= 2), B_n (n >= 3), D4, H3.
bool is_lattice_type(const TypeLabel& label);

/// |W| for the irreducible type.
std::uint64_t group_order(const TypeLabel& label);
std::uint64_t group_order(const std::vector<TypeLabel>& labels);

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  /// Validates symmetry, unit diagonal, and off-diagonal entries >= 2.
  explicit CoxeterMatrix(std::vector<std::vector<int>> entries);

  /// First line the rank n, then n lines of n integers.
  static CoxeterMatrix parse(std::istream& in);
  static CoxeterMatrix named(const TypeLabel& label);
  /// Named type or product of named types, e.g. "D6" or "A1xA1".
  static CoxeterMatrix named(std::string_view text);
  static CoxeterMatrix block_diagonal(const std::vector<CoxeterMatrix>& blocks);

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator()(int s, int t) const { return entries_[s][t]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::vector<std::vector<int>> entries_;
};

CoxeterMatrix named_type(const TypeLabel& label);

/// Recognizes an irreducible Coxeter diagram given by its matrix.
/// Throws std::runtime_error if the diagram is not of finite type.
TypeLabel recognize_irreducible(const CoxeterMatrix& matrix);

/// Connected components of the Coxeter graph (edges where m >= 3), each
/// listed in increasing node order; components ordered by smallest node.
std::vector<std::vector<int>> diagram_components(const CoxeterMatrix& matrix);

/// Submatrix on the given nodes, in the given order.
CoxeterMatrix restrict_matrix(const CoxeterMatrix& matrix, const std::vector<int>& nodes);

}  // namespace coxabs
