#include "paulipf/pauli.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace paulipf {

namespace {

// Letterwise products. LETTER_PROD[a][b] is the resulting letter and
// PHASE_ADD[a][b] the phase exponent picked up, so that a*b =
// i^PHASE_ADD[a][b] * LETTER_PROD[a][b]. Derived from X = iZY, Y = iXZ,
// Z = iYX and the involutivity of each letter; cross-checked numerically
// against to_matrix in the unit tests.
constexpr PauliLetter L_I = PauliLetter::I;
constexpr PauliLetter L_X = PauliLetter::X;
constexpr PauliLetter L_Y = PauliLetter::Y;
constexpr PauliLetter L_Z = PauliLetter::Z;

constexpr PauliLetter LETTER_PROD[4][4] = {
    {L_I, L_X, L_Y, L_Z},
    {L_X, L_I, L_Z, L_Y},
    {L_Y, L_Z, L_I, L_X},
    {L_Z, L_Y, L_X, L_I},
};

// i exponents: XY = iZ, YZ = iX, ZX = iY and the reversed orders pick up -i.
constexpr int PHASE_ADD[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

CMatrix letter_matrix(PauliLetter l) {
  const ComplexScalar i{0.0, 1.0};
  switch (l) {
    case PauliLetter::I:
      return CMatrix::from_rows({{1, 0}, {0, 1}});
    case PauliLetter::X:
      return CMatrix::from_rows({{0, 1}, {1, 0}});
    case PauliLetter::Y:
      return CMatrix::from_rows({{0, -i}, {i, 0}});
    case PauliLetter::Z:
      return CMatrix::from_rows({{1, 0}, {0, -1}});
  }
  throw Error("unreachable letter");
}

ExactMatrix letter_matrix_exact(PauliLetter l) {
  ExactMatrix m(2, 2);
  const ExactComplex one(Rational(1));
  const ExactComplex img = exact_i();
  switch (l) {
    case PauliLetter::I:
      m(0, 0) = one;
      m(1, 1) = one;
      break;
    case PauliLetter::X:
      m(0, 1) = one;
      m(1, 0) = one;
      break;
    case PauliLetter::Y:
      m(0, 1) = -img;
      m(1, 0) = img;
      break;
    case PauliLetter::Z:
      m(0, 0) = one;
      m(1, 1) = -one;
      break;
  }
  return m;
}

void check_qubits(int n) {
  if (n != 1 && n != 2)
    throw QubitMismatch("qubit count must be 1 or 2, got " + std::to_string(n));
}

}  // namespace

char letter_char(PauliLetter l) {
  return "IXYZ"[static_cast<int>(l)];
}

PauliElement PauliElement::single(PauliLetter l, int phase) {
  PauliElement e;
  e.n = 1;
  e.phase = ((phase % 4) + 4) % 4;
  e.word[0] = l;
  return e;
}

PauliElement PauliElement::two(PauliLetter l1, PauliLetter l2, int phase) {
  PauliElement e;
  e.n = 2;
  e.phase = ((phase % 4) + 4) % 4;
  e.word[0] = l1;
  e.word[1] = l2;
  return e;
}

PauliElement PauliElement::identity(int n) {
  check_qubits(n);
  PauliElement e;
  e.n = n;
  return e;
}

int PauliElement::key() const {
  int k = phase;
  for (int q = 0; q < n; ++q) k = k * 4 + static_cast<int>(word[q]);
  return k + (n == 2 ? 64 : 0);  // keep 1- and 2-qubit keys disjoint
}

bool PauliElement::is_identity() const {
  if (phase != 0) return false;
  for (int q = 0; q < n; ++q)
    if (word[q] != PauliLetter::I) return false;
  return true;
}

std::string PauliElement::to_string() const {
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::string s = prefix[phase];
  for (int q = 0; q < n; ++q) s += letter_char(word[q]);
  return s;
}

PauliElement pauli_mul(const PauliElement& a, const PauliElement& b) {
  if (a.n != b.n)
    throw QubitMismatch("cannot multiply elements on different qubit counts");
  PauliElement r;
  r.n = a.n;
  int phase = a.phase + b.phase;
  for (int q = 0; q < a.n; ++q) {
    const int la = static_cast<int>(a.word[q]);
    const int lb = static_cast<int>(b.word[q]);
    r.word[q] = LETTER_PROD[la][lb];
    phase += PHASE_ADD[la][lb];
  }
  r.phase = phase % 4;
  return r;
}

PauliElement pauli_inverse(const PauliElement& a) {
  // Each letter squares to the identity, so the inverse flips only the phase.
  PauliElement r = a;
  r.phase = (4 - a.phase) % 4;
  return r;
}

CMatrix to_matrix(const PauliElement& e) {
  check_qubits(e.n);
  static const ComplexScalar phase_value[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  CMatrix m = letter_matrix(e.word[0]);
  if (e.n == 2) m = kron(m, letter_matrix(e.word[1]));
  return m * phase_value[e.phase];
}

ExactMatrix to_matrix_exact(const PauliElement& e) {
  check_qubits(e.n);
  ExactMatrix m = letter_matrix_exact(e.word[0]);
  if (e.n == 2) {
    const ExactMatrix b = letter_matrix_exact(e.word[1]);
    ExactMatrix k(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int p = 0; p < 2; ++p)
          for (int q = 0; q < 2; ++q)
            k(2 * i + p, 2 * j + q) = m(i, j) * b(p, q);
    m = k;
  }
  ExactComplex ph(Rational(1));
  for (int t = 0; t < e.phase; ++t) ph = ph * exact_i();
  ExactMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = ph * m(i, j);
  return r;
}

PauliElement from_matrix(const CMatrix& m) {
  if (!m.is_square() || (m.rows() != 2 && m.rows() != 4))
    throw NotPauli("from_matrix needs a 2x2 or 4x4 matrix");
  const int n = m.rows() == 2 ? 1 : 2;
  const int letters = n == 1 ? 4 : 16;
  for (int phase = 0; phase < 4; ++phase) {
    for (int w = 0; w < letters; ++w) {
      PauliElement e;
      e.n = n;
      e.phase = phase;
      e.word[0] = static_cast<PauliLetter>(n == 1 ? w : w / 4);
      if (n == 2) e.word[1] = static_cast<PauliLetter>(w % 4);
      if (approx_equal(to_matrix(e), m, 1e-10)) return e;
    }
  }
  throw NotPauli("matrix is not i^p times a Pauli word");
}

PauliElement parse_pauli(const std::string& text) {
  size_t pos = 0;
  int phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  const std::string letters = text.substr(pos);
  if (letters.empty() || letters.size() > 2)
    throw ParseError("bad Pauli element '" + text +
                     "': expected 1 or 2 letters after the sign");
  PauliElement e;
  e.n = static_cast<int>(letters.size());
  e.phase = phase % 4;
  for (size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I': e.word[q] = PauliLetter::I; break;
      case 'X': e.word[q] = PauliLetter::X; break;
      case 'Y': e.word[q] = PauliLetter::Y; break;
      case 'Z': e.word[q] = PauliLetter::Z; break;
      default:
        throw ParseError("bad Pauli letter '" + std::string(1, letters[q]) +
                         "' in '" + text + "'");
    }
  }
  return e;
}

FiniteMatrixGroup::FiniteMatrixGroup(std::vector<PauliElement> elements,
                                     std::vector<PauliElement> generators)
    : elements_(std::move(elements)), generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool FiniteMatrixGroup::contains(const PauliElement& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool FiniteMatrixGroup::contains_all(const FiniteMatrixGroup& sub) const {
  for (const auto& e : sub.elements())
    if (!contains(e)) return false;
  return true;
}

FiniteMatrixGroup generate_group(const std::vector<PauliElement>& generators) {
  if (generators.empty())
    throw QubitMismatch("generate_group: empty generator list");
  const int n = generators[0].n;
  for (const auto& g : generators)
    if (g.n != n)
      throw QubitMismatch("generate_group: mixed qubit counts");

  std::unordered_set<int> seen;
  std::deque<PauliElement> todo;
  std::vector<PauliElement> elements;

  auto add = [&](const PauliElement& e) {
    if (seen.insert(e.key()).second) {
      elements.push_back(e);
      todo.push_back(e);
    }
  };
  add(PauliElement::identity(n));
  for (const auto& g : generators) add(g);

  while (!todo.empty()) {
    const PauliElement cur = todo.front();
    todo.pop_front();
    for (const auto& g : generators) {
      add(pauli_mul(cur, g));
      add(pauli_mul(g, cur));
    }
  }
  return FiniteMatrixGroup(std::move(elements), generators);
}

CentralProductCheck is_central_product(const FiniteMatrixGroup& g,
                                       const FiniteMatrixGroup& u,
                                       const FiniteMatrixGroup& v) {
  if (!g.contains_all(u))
    throw NotSubgroup("U is not contained in G");
  if (!g.contains_all(v))
    throw NotSubgroup("V is not contained in G");

  CentralProductCheck out;
  for (const auto& ue : u.elements()) {
    for (const auto& ve : v.elements()) {
      const PauliElement comm = pauli_mul(
          pauli_mul(pauli_inverse(ue), pauli_inverse(ve)), pauli_mul(ue, ve));
      if (!comm.is_identity()) {
        out.ok = false;
        out.witness = std::make_pair(ue, ve);
        out.reason = "group commutator [" + ue.to_string() + ", " +
                     ve.to_string() + "] = " + comm.to_string();
        return out;
      }
    }
  }

  std::vector<PauliElement> products;
  products.reserve(u.order() * static_cast<size_t>(v.order()));
  for (const auto& ue : u.elements())
    for (const auto& ve : v.elements()) products.push_back(pauli_mul(ue, ve));
  std::sort(products.begin(), products.end());
  products.erase(std::unique(products.begin(), products.end()),
                 products.end());

  for (const auto& ge : g.elements()) {
    if (!std::binary_search(products.begin(), products.end(), ge)) {
      out.ok = false;
      out.missing = ge;
      out.reason = "element " + ge.to_string() + " is not a product u*v";
      return out;
    }
  }
  if (products.size() != g.elements().size()) {
    out.ok = false;
    out.reason = "product set leaves G";
    return out;
  }
  out.ok = true;
  return out;
}

std::vector<PauliElement> read_generator_file(std::istream& in) {
  std::vector<PauliElement> gens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Trim whitespace.
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    try {
      gens.push_back(parse_pauli(token));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return gens;
}

}  // namespace paulipf
