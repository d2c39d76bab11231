#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paulipf/complex_matrix.hpp"
#include "paulipf/exact.hpp"

namespace paulipf {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(PauliLetter l);

/// Exact element of a Pauli group: i^phase times a tensor word of letters.
///
/// Canonical form is the pair (phase, word); two elements compare equal iff
/// both coincide. Qubit count n is restricted to 1 or 2.
struct PauliElement {
  int n = 1;
  int phase = 0;  // exponent of i, 0..3
  std::array<PauliLetter, 2> word{PauliLetter::I, PauliLetter::I};

  static PauliElement single(PauliLetter l, int phase = 0);
  static PauliElement two(PauliLetter l1, PauliLetter l2, int phase = 0);
  static PauliElement identity(int n);

  /// Small integer key encoding (n, phase, word); used for hashing and
  /// canonical ordering during group closure.
  int key() const;

  bool is_identity() const;
  bool operator==(const PauliElement& o) const { return key() == o.key(); }
  bool operator!=(const PauliElement& o) const { return !(*this == o); }
  bool operator<(const PauliElement& o) const { return key() < o.key(); }

  std::string to_string() const;  // e.g. "-iYX" for -i (Y (x) X)
};

/// Canonical product with phases accumulated mod 4.
PauliElement pauli_mul(const PauliElement& a, const PauliElement& b);

PauliElement pauli_inverse(const PauliElement& a);

/// i^phase times the Kronecker product of letter matrices (dimension 2^n).
CMatrix to_matrix(const PauliElement& e);
ExactMatrix to_matrix_exact(const PauliElement& e);

/// Recognition inverse of to_matrix for dimensions 2 and 4; throws NotPauli
/// when no element matches within 1e-10.
PauliElement from_matrix(const CMatrix& m);

/// Parses "[+|-][i]LETTERS", e.g. "-iYX" or "Z". Throws ParseError.
PauliElement parse_pauli(const std::string& text);

/// Finite set of canonical Pauli elements closed under multiplication.
class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup() = default;
  FiniteMatrixGroup(std::vector<PauliElement> elements,
                    std::vector<PauliElement> generators);

  const std::vector<PauliElement>& elements() const { return elements_; }
  const std::vector<PauliElement>& generators() const { return generators_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int qubits() const { return elements_.empty() ? 0 : elements_[0].n; }

  bool contains(const PauliElement& e) const;
  bool contains_all(const FiniteMatrixGroup& sub) const;
  bool same_elements(const FiniteMatrixGroup& o) const {
    return elements_ == o.elements_;
  }

 private:
  std::vector<PauliElement> elements_;  // sorted by key
  std::vector<PauliElement> generators_;
};

/// Closure of the generators under pauli_mul (breadth-first to fixpoint).
/// Throws QubitMismatch on mixed qubit counts or an empty list.
FiniteMatrixGroup generate_group(const std::vector<PauliElement>& generators);

struct CentralProductCheck {
  bool ok = false;
  /// Set when a pair u, v fails to commute (group commutator != identity).
  std::optional<std::pair<PauliElement, PauliElement>> witness;
  /// Set when the product set UV misses an element of G.
  std::optional<PauliElement> missing;
  std::string reason;
};

/// True iff {u v} covers G element-for-element and every group commutator
/// u^-1 v^-1 u v is the identity. Throws NotSubgroup if U or V is not
/// contained in G.
CentralProductCheck is_central_product(const FiniteMatrixGroup& g,
                                       const FiniteMatrixGroup& u,
                                       const FiniteMatrixGroup& v);

/// Reads one element per line in the parse_pauli format; blank lines are
/// skipped. Throws ParseError with a line number on bad input.
std::vector<PauliElement> read_generator_file(std::istream& in);

}  // namespace paulipf
